#include "zksc/value.hpp"

#include <stdexcept>

namespace zksc {

bool operator==(const CoreValue& a, const CoreValue& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.v);
        if constexpr (std::is_same_v<T, CoreList>) {
          if (x.size() != y.size()) return false;
          for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] == y[i])) return false;
          return true;
        } else {
          return x == y;
        }
      },
      a.v);
}

MaybeValue MaybeValue::known(Value v) {
  MaybeValue m;
  m.v_ = std::make_shared<const Value>(std::move(v));
  return m;
}

MaybeValue known_nat(Nat n) { return MaybeValue::known(Value{std::move(n)}); }
MaybeValue known_bool(bool b) { return MaybeValue::known(Value{b}); }
MaybeValue known_unit() { return MaybeValue::known(Value{UnitValue{}}); }
MaybeValue known_list(ValueList elems) {
  return MaybeValue::known(Value{std::move(elems)});
}

bool equal_maybe(const MaybeValue& a, const MaybeValue& b) {
  if (a.is_known() != b.is_known()) return false;
  if (!a.is_known()) return true;
  const Value& x = a.get();
  const Value& y = b.get();
  if (x.v.index() != y.v.index()) return false;
  return std::visit(
      [&](const auto& xv) -> bool {
        using T = std::decay_t<decltype(xv)>;
        const auto& yv = std::get<T>(y.v);
        if constexpr (std::is_same_v<T, ValueList>) {
          if (xv.size() != yv.size()) return false;
          for (std::size_t i = 0; i < xv.size(); ++i)
            if (!equal_maybe(xv[i], yv[i])) return false;
          return true;
        } else {
          return xv == yv;
        }
      },
      x.v);
}

std::string to_string(const MaybeValue& m) {
  if (!m.is_known()) return "?";
  const Value& v = m.get();
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nat>) {
          return nat_to_string(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, UnitValue>) {
          return "()";
        } else {
          std::string s = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) s += ", ";
            s += to_string(x[i]);
          }
          return s + "]";
        }
      },
      v.v);
}

std::string to_string(const CoreValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nat>) {
          return nat_to_string(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, UnitValue>) {
          return "()";
        } else {
          std::string s = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) s += ", ";
            s += to_string(x[i]);
          }
          return s + "]";
        }
      },
      v.v);
}

MaybeValue allpure(const CoreValue& v) {
  return std::visit(
      [](const auto& x) -> MaybeValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CoreList>) {
          ValueList out;
          out.reserve(x.size());
          for (const auto& e : x) out.push_back(allpure(e));
          return known_list(std::move(out));
        } else {
          return MaybeValue::known(Value{x});
        }
      },
      v.v);
}

MaybeValue upd(const MaybeValue& a, std::span<const MaybeValue> indices,
               const MaybeValue& v) {
  if (indices.empty()) return v;
  if (!a.is_known() || !indices.front().is_known()) return MaybeValue::unknown();
  const Value& av = a.get();
  if (!av.is_list())
    throw std::logic_error("upd: updating a non-list value");
  const Value& iv = indices.front().get();
  if (!iv.is_nat()) throw std::logic_error("upd: non-numeric index");
  const Nat& i = iv.nat();
  const ValueList& list = av.list();
  if (i >= list.size())
    throw EvalFailure{"index " + nat_to_string(i) + " out of bounds for list of length " +
                          std::to_string(list.size()),
                      SourcePos{}};
  std::size_t idx = static_cast<std::size_t>(i);
  ValueList out = list;
  out[idx] = upd(list[idx], indices.subspan(1), v);
  return known_list(std::move(out));
}

void Env::push(const std::string& var, MaybeValue v) {
  entries_.emplace_back(var, std::move(v));
}

void Env::pop_top() { entries_.pop_back(); }

void Env::update(const std::string& var, MaybeValue v) {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == var) {
      it->second = std::move(v);
      return;
    }
  }
  throw std::logic_error("env update of unbound variable '" + var + "'");
}

const MaybeValue& Env::lookup(const std::string& var) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->first == var) return it->second;
  throw std::logic_error("env lookup of unbound variable '" + var + "'");
}

const std::pair<std::string, MaybeValue>& Env::from_top(std::size_t i) const {
  return entries_[entries_.size() - 1 - i];
}

bool Env::operator==(const Env& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first != o.entries_[i].first) return false;
    if (!equal_maybe(entries_[i].second, o.entries_[i].second)) return false;
  }
  return true;
}

bool equal_streams(const OutStreams& a, const OutStreams& b) {
  if (a.prover.size() != b.prover.size() ||
      a.verifier.size() != b.verifier.size())
    return false;
  for (std::size_t i = 0; i < a.prover.size(); ++i)
    if (!equal_maybe(a.prover[i], b.prover[i])) return false;
  for (std::size_t i = 0; i < a.verifier.size(); ++i)
    if (!equal_maybe(a.verifier[i], b.verifier[i])) return false;
  return true;
}

}  // namespace zksc
