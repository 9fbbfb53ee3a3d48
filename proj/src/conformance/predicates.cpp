#include "zksc/conformance/predicates.hpp"

#include <random>

namespace zksc::conf {

namespace {

// v belongs to the primitive data type t.
bool value_in_type(const Value& v, const DataType& t, const Nat& modulus) {
  switch (t.kind) {
    case DataType::Kind::UInt:
      return v.is_nat() && (!t.has_modulus || v.nat() < modulus);
    case DataType::Kind::Bool:
      return v.is_bool();
    case DataType::Kind::Unit:
      return v.is_unit();
    case DataType::Kind::List:
      return false;
  }
  return false;
}

}  // namespace

bool exact_in(const QualType& q, const MaybeValue& v, const TypePred& p,
              const Nat& modulus) {
  if (!p(q)) return !v.is_known();
  if (!v.is_known()) return false;
  if (q.data.is_primitive()) return value_in_type(v.get(), q.data, modulus);
  if (!v.get().is_list()) return false;
  for (const MaybeValue& e : v.get().list())
    if (!exact_in(*q.data.elem, e, p, modulus)) return false;
  return true;
}

bool coincident_in(const QualType& q, const MaybeValue& a, const MaybeValue& b,
                   const TypePred& p, const Nat& modulus) {
  if (!p(q)) return true;
  if (!a.is_known() || !b.is_known()) return false;
  if (q.data.is_primitive())
    return value_in_type(a.get(), q.data, modulus) && equal_maybe(a, b);
  if (!a.get().is_list() || !b.get().is_list()) return false;
  const ValueList& x = a.get().list();
  const ValueList& y = b.get().list();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!coincident_in(*q.data.elem, x[i], y[i], p, modulus)) return false;
  return true;
}

bool env_exact_in(const TypeBindings& gamma, const Env& env, const TypePred& p,
                  const Nat& modulus) {
  if (gamma.size() != env.size()) return false;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& [var, v] = env.from_top(i);
    if (var != gamma[i].first) return false;
    if (!exact_in(gamma[i].second, v, p, modulus)) return false;
  }
  return true;
}

bool env_coincident_in(const TypeBindings& gamma, const Env& a, const Env& b,
                       const TypePred& p, const Nat& modulus) {
  if (gamma.size() != a.size() || gamma.size() != b.size()) return false;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& [va, xa] = a.from_top(i);
    const auto& [vb, xb] = b.from_top(i);
    if (va != gamma[i].first || vb != gamma[i].first) return false;
    if (!coincident_in(gamma[i].second, xa, xb, p, modulus)) return false;
  }
  return true;
}

namespace {

bool stream_exact_in(const std::deque<MaybeValue>& stream, bool visible) {
  for (const MaybeValue& v : stream) {
    if (visible) {
      if (!v.is_known()) return false;
      if (!v.get().is_nat() && !v.get().is_bool()) return false;
    } else {
      if (v.is_known()) return false;
    }
  }
  return true;
}

}  // namespace

bool streams_exact_in(const OutStreams& out, Domain d) {
  return stream_exact_in(out.prover, domain_le(Domain::Prover, d)) &&
         stream_exact_in(out.verifier, domain_le(Domain::Verifier, d));
}

bool streams_coincident_in(const OutStreams& a, const OutStreams& b, Domain d) {
  if (a.prover.size() != b.prover.size() ||
      a.verifier.size() != b.verifier.size())
    return false;
  for (Domain stream_domain : {Domain::Prover, Domain::Verifier}) {
    if (!domain_le(stream_domain, d)) continue;
    const auto& x = a.at(stream_domain);
    const auto& y = b.at(stream_domain);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!equal_maybe(x[i], y[i])) return false;
  }
  return true;
}

namespace {

InputAssignment random_assignment(const Circuit& circuit, std::mt19937_64& rng) {
  InputAssignment pi;
  auto fill = [&](std::vector<Nat>& out, std::uint32_t count) {
    for (std::uint32_t i = 0; i < count; ++i)
      out.push_back(Nat(rng()) % circuit.modulus);
  };
  fill(pi.prover, circuit.input_count[0]);
  fill(pi.verifier, circuit.input_count[1]);
  return pi;
}

bool composite_exact_rec(const QualType& q, const CompositeValue& cv,
                         const Circuit& circuit, std::mt19937_64& rng) {
  Stage s = q.stage_or_pre();
  // A $post value carries a node; a known primitive value then agrees with
  // the node under |.| and under evaluation with any input.
  if (s == Stage::Post) {
    if (!cv.node_known()) return false;
    if (cv.value_known() && (cv.value->is_nat() || cv.value->is_bool())) {
      Nat expected = cv.value->is_nat() ? cv.value->nat()
                                        : Nat(cv.value->boolean() ? 0 : 1);
      std::optional<Nat> st = eval_static(*cv.node, circuit);
      if (!st || *st != expected) return false;
      for (int trial = 0; trial < 2; ++trial) {
        InputAssignment pi = random_assignment(circuit, rng);
        if (eval_with_input(*cv.node, circuit, pi) != expected) return false;
      }
    }
  }
  if (s == Stage::Pre && cv.node_known()) return false;
  if (q.domain != Domain::Public && cv.value_known()) return false;
  if (q.domain == Domain::Public) {
    if (!cv.value_known()) return false;
    if (q.data.is_primitive()) {
      switch (q.data.kind) {
        case DataType::Kind::UInt:
          if (!cv.value->is_nat()) return false;
          if (q.data.has_modulus && cv.value->nat() >= circuit.modulus)
            return false;
          break;
        case DataType::Kind::Bool:
          if (!cv.value->is_bool()) return false;
          break;
        case DataType::Kind::Unit:
          if (!cv.value->is_unit()) return false;
          break;
        default:
          return false;
      }
    } else {
      if (!cv.value->is_list()) return false;
      for (const CompositeValue& e : cv.value->list())
        if (!composite_exact_rec(*q.data.elem, e, circuit, rng)) return false;
    }
  }
  return true;
}

}  // namespace

bool composite_exact(const QualType& q, const CompositeValue& cv,
                     const Circuit& circuit, std::uint64_t pi_seed) {
  std::mt19937_64 rng(pi_seed);
  return composite_exact_rec(q, cv, circuit, rng);
}

bool env_composite_exact(const TypeBindings& gamma, const CompositeEnv& env,
                         const Circuit& circuit, std::uint64_t pi_seed) {
  if (gamma.size() != env.size()) return false;
  std::mt19937_64 rng(pi_seed);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& [var, cv] = env.from_top(i);
    if (var != gamma[i].first) return false;
    if (!composite_exact_rec(gamma[i].second, cv, circuit, rng)) return false;
  }
  return true;
}

bool env_bullet_sim(const CompositeEnv& comp_env, const Circuit& circuit,
                    const InputAssignment& pi, const Env& circ_env) {
  if (comp_env.size() != circ_env.size()) return false;
  for (std::size_t i = 0; i < comp_env.size(); ++i) {
    const auto& [cvar, cv] = comp_env.from_top(i);
    const auto& [evar, v] = circ_env.from_top(i);
    if (cvar != evar) return false;
    if (!sim(bullet(cv, circuit, pi), v)) return false;
  }
  return true;
}

bool counters_bullet_sim(std::uint32_t consumed_prover,
                         std::uint32_t consumed_verifier,
                         const InputAssignment& pi,
                         const OutStreams& remaining) {
  auto check = [](std::uint32_t consumed, const std::vector<Nat>& values,
                  const std::deque<MaybeValue>& stream) {
    if (consumed > values.size()) return false;
    if (values.size() - consumed != stream.size()) return false;
    for (std::size_t i = 0; i < stream.size(); ++i)
      if (!sim(known_nat(values[consumed + i]), stream[i])) return false;
    return true;
  };
  return check(consumed_prover, pi.prover, remaining.prover) &&
         check(consumed_verifier, pi.verifier, remaining.verifier);
}

}  // namespace zksc::conf
