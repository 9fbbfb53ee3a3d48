#include "zksc/eval.hpp"

#include <stdexcept>

namespace zksc {

namespace {

// The inner monadic layer: arithmetic on pure values. Throws EvalFailure on
// division by zero and on unbounded subtraction below zero; uint[N]
// arithmetic is performed modulo N on canonical representatives.
Value apply_binop(BinOpKind op, const Value& a, const Value& b,
                  bool has_modulus, const Nat& modulus, SourcePos pos) {
  if (binop_is_logic(op)) {
    bool x = a.boolean();
    bool y = b.boolean();
    return Value{op == BinOpKind::And ? (x && y) : (x || y)};
  }
  const Nat& x = a.nat();
  const Nat& y = b.nat();
  switch (op) {
    case BinOpKind::Add:
      return Value{has_modulus ? Nat((x + y) % modulus) : Nat(x + y)};
    case BinOpKind::Sub:
      if (has_modulus) return Value{x >= y ? Nat(x - y) : Nat(x + modulus - y)};
      if (x < y)
        throw EvalFailure{"subtraction of naturals went below zero", pos};
      return Value{Nat(x - y)};
    case BinOpKind::Mul:
      return Value{has_modulus ? Nat((x * y) % modulus) : Nat(x * y)};
    case BinOpKind::Div:
      if (y == 0) throw EvalFailure{"division by zero", pos};
      return Value{Nat(x / y)};
    case BinOpKind::Mod:
      if (y == 0) throw EvalFailure{"modulus by zero", pos};
      return Value{Nat(x % y)};
    case BinOpKind::Eq: return Value{x == y};
    case BinOpKind::Lt: return Value{x < y};
    case BinOpKind::Le: return Value{x <= y};
    default: break;
  }
  throw std::logic_error("apply_binop: unhandled operator");
}

// do { a <- a_hat; i <- i_hat; pure a_i } with a bounds check on pure
// indices.
MaybeValue index_into(const MaybeValue& a, const MaybeValue& i, SourcePos pos) {
  if (!a.is_known() || !i.is_known()) return MaybeValue::unknown();
  const ValueList& list = a.get().list();
  const Nat& n = i.get().nat();
  if (n >= list.size())
    throw EvalFailure{"index " + nat_to_string(n) +
                          " out of bounds for list of length " +
                          std::to_string(list.size()),
                      pos};
  return list[static_cast<std::size_t>(n)];
}

const QualType& type_of(const Expr& e) {
  if (!e.type) throw std::logic_error("evaluating an untypechecked expression");
  return *e.type;
}

class Evaluator {
 public:
  enum class Mode { Local, Circuit };
  struct Underflow {
    SourcePos pos;
  };

  Evaluator(Mode mode, Domain d, const Inputs& inputs, const Nat& modulus,
            Env env, OutStreams streams)
      : mode_(mode), d_(d), inputs_(inputs), modulus_(modulus),
        env_(std::move(env)), out_(std::move(streams)) {}

  MaybeValue eval(const Expr& e) {
    return std::visit([&](const auto& n) { return eval_node(e, n); }, e.node);
  }

  Env& env() { return env_; }
  OutStreams& streams() { return out_; }

 private:
  bool literal_known(const Expr& e) const {
    const QualType& q = type_of(e);
    if (mode_ == Mode::Local) return domain_le(q.domain, d_);
    return q.stage_or_pre() == Stage::Post || q.domain == Domain::Public;
  }

  MaybeValue eval_node(const Expr&, const UnitLit&) { return known_unit(); }

  MaybeValue eval_node(const Expr& e, const NatLit& n) {
    if (!literal_known(e)) return MaybeValue::unknown();
    const QualType& q = type_of(e);
    return known_nat(q.data.has_modulus ? mod_reduce(n.value, modulus_)
                                        : n.value);
  }

  MaybeValue eval_node(const Expr& e, const BoolLit& n) {
    if (!literal_known(e)) return MaybeValue::unknown();
    return known_bool(n.value);
  }

  MaybeValue eval_node(const Expr&, const VarRef& n) {
    return env_.lookup(n.name);
  }

  MaybeValue eval_node(const Expr& e, const BinOp& n) {
    MaybeValue a = eval(*n.lhs);
    MaybeValue b = eval(*n.rhs);
    if (!a.is_known() || !b.is_known()) return MaybeValue::unknown();
    bool has_modulus = type_of(*n.lhs).data.has_modulus;
    return MaybeValue::known(
        apply_binop(n.op, a.get(), b.get(), has_modulus, modulus_, e.pos));
  }

  MaybeValue eval_node(const Expr& e, const AssertExpr& n) {
    MaybeValue v = eval(*n.arg);
    if (v.is_known() && !v.get().boolean())
      throw EvalFailure{"assertion failed", e.pos};
    return known_unit();
  }

  MaybeValue eval_node(const Expr& e, const AssertZeroExpr& n) {
    MaybeValue v = eval(*n.arg);
    if (v.is_known() && v.get().nat() != 0)
      throw EvalFailure{"assert_zero failed on value " +
                            nat_to_string(v.get().nat()),
                        e.pos};
    return known_unit();
  }

  MaybeValue eval_node(const Expr&, const GetExpr& n) {
    bool visible = mode_ == Mode::Local ? domain_le(n.source, d_)
                                        : n.source == Domain::Public;
    if (!visible) return MaybeValue::unknown();
    const auto& dict = inputs_.at(n.source);
    auto it = dict.find(n.key);
    if (it == dict.end())
      throw std::logic_error("missing input key '" + n.key +
                             "' (inputs must be validated before evaluation)");
    return allpure(it->second);
  }

  MaybeValue eval_node(const Expr&, const IfExpr& n) {
    MaybeValue g = eval(*n.guard);
    if (!g.is_known()) return MaybeValue::unknown();
    return g.get().boolean() ? eval(*n.then_e) : eval(*n.else_e);
  }

  MaybeValue eval_node(const Expr&, const ForExpr& n) {
    MaybeValue lo = eval(*n.lo);
    MaybeValue hi = eval(*n.hi);
    if (!lo.is_known() || !hi.is_known()) return MaybeValue::unknown();
    const Nat& i1 = lo.get().nat();
    const Nat& i2 = hi.get().nat();
    if (i2 <= i1) return known_list({});  // empty loop leaves the env alone
    Nat count = i2 - i1;
    ValueList items;
    env_.push(n.var, known_nat(i1));
    for (Nat k = 0; k < count; ++k) {
      if (k != 0) env_.update(n.var, known_nat(Nat(i1 + k)));
      items.push_back(eval(*n.body));
    }
    env_.pop_top();
    return known_list(std::move(items));
  }

  MaybeValue eval_node(const Expr& e, const WireExpr& n) {
    MaybeValue v = eval(*n.body);
    Domain d = type_of(e).domain;
    if (mode_ == Mode::Local) {
      if (d != Domain::Public) out_.at(d).push_back(v);
      return v;
    }
    if (d == Domain::Public) return v;
    auto& stream = out_.at(d);
    if (stream.empty()) throw Underflow{e.pos};
    MaybeValue head = stream.front();
    stream.pop_front();
    return head;
  }

  MaybeValue eval_node(const Expr& e, const CastExpr& n) {
    MaybeValue v = eval(*n.body);
    const QualType& target = type_of(e);
    bool keep = mode_ == Mode::Local
                    ? domain_le(target.domain, d_)
                    : target.stage_or_pre() == Stage::Post ||
                          target.domain == Domain::Public;
    return keep ? v : MaybeValue::unknown();
  }

  MaybeValue eval_node(const Expr& e, const AssignExpr& n) {
    MaybeValue a = env_.lookup(n.lv.var);
    std::vector<MaybeValue> indices;
    indices.reserve(n.lv.indices.size());
    for (const auto& idx : n.lv.indices) indices.push_back(eval(*idx));
    MaybeValue v = eval(*n.rhs);
    MaybeValue updated;
    try {
      updated = upd(a, indices, v);
    } catch (EvalFailure& f) {
      f.pos = e.pos;
      throw;
    }
    env_.update(n.lv.var, std::move(updated));
    return known_unit();
  }

  MaybeValue eval_node(const Expr& e, const LoadExpr& n) {
    MaybeValue a = env_.lookup(n.lv.var);
    for (const auto& idx : n.lv.indices) {
      MaybeValue i = eval(*idx);
      a = index_into(a, i, e.pos);
    }
    MaybeValue i = eval(*n.index);
    return index_into(a, i, e.pos);
  }

  MaybeValue eval_node(const Expr&, const LetExpr& n) {
    MaybeValue bound = eval(*n.bound);
    env_.push(n.var, std::move(bound));
    MaybeValue v = eval(*n.rest);
    env_.pop_top();
    return v;
  }

  MaybeValue eval_node(const Expr&, const SeqExpr& n) {
    eval(*n.first);
    return eval(*n.rest);
  }

  MaybeValue eval_node(const Expr&, const CallExpr&) {
    throw std::logic_error("evaluating a call expression");
  }

  Mode mode_;
  Domain d_;
  const Inputs& inputs_;
  const Nat& modulus_;
  Env env_;
  OutStreams out_;
};

}  // namespace

bool equal_results(const LocalResult& a, const LocalResult& b) {
  if (a.ok != b.ok) return false;
  if (!a.ok) return true;
  return equal_maybe(a.value, b.value) && a.env == b.env &&
         equal_streams(a.out, b.out);
}

LocalResult eval_local(Domain d, const Expr& e, Env env, const Inputs& inputs,
                       const Nat& modulus) {
  Evaluator ev(Evaluator::Mode::Local, d, inputs, modulus, std::move(env),
               OutStreams{});
  LocalResult r;
  try {
    r.value = ev.eval(e);
    r.ok = true;
    r.env = std::move(ev.env());
    r.out = std::move(ev.streams());
  } catch (const EvalFailure& f) {
    r.ok = false;
    r.failure = f.reason;
    r.failure_pos = f.pos;
  }
  return r;
}

CircuitResult eval_circuit(const Expr& e, Env env, const Inputs& inputs,
                           OutStreams streams, const Nat& modulus) {
  Evaluator ev(Evaluator::Mode::Circuit, Domain::Public, inputs, modulus,
               std::move(env), std::move(streams));
  CircuitResult r;
  try {
    r.value = ev.eval(e);
    r.status = CircuitResult::Status::Ok;
    r.env = std::move(ev.env());
    r.remaining = std::move(ev.streams());
  } catch (const EvalFailure& f) {
    r.status = CircuitResult::Status::Failed;
    r.failure = f.reason;
    r.failure_pos = f.pos;
  } catch (const Evaluator::Underflow& u) {
    r.status = CircuitResult::Status::StreamUnderflow;
    r.failure = "wire found an empty stream";
    r.failure_pos = u.pos;
  }
  return r;
}

}  // namespace zksc
