#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zksc/circuit.hpp"
#include "zksc/compile.hpp"
#include "zksc/types.hpp"
#include "zksc/value.hpp"

// The exactness and coincidence predicates relating values to types per
// viewpoint, implemented directly from their definitions, plus their
// composite-value counterpart. These drive the metatheorem harness.
namespace zksc::conf {

// A data-insensitive predicate on qualified types: either "domain lies at
// or below d" or "stage is $post or domain is @public" (the circuit view).
class TypePred {
 public:
  static TypePred in_domain(Domain d) { return TypePred{false, d}; }
  static TypePred in_circuit() { return TypePred{true, Domain::Public}; }

  bool operator()(const QualType& q) const {
    if (circuit_) return q.stage_or_pre() == Stage::Post || q.domain == Domain::Public;
    return domain_le(q.domain, d_);
  }

 private:
  TypePred(bool circuit, Domain d) : circuit_(circuit), d_(d) {}
  bool circuit_;
  Domain d_;
};

// v is q-exact in P: fully known (and well-typed) where P holds, unknown
// where it does not.
bool exact_in(const QualType& q, const MaybeValue& v, const TypePred& p,
              const Nat& modulus);

// v and v' are q-coincident in P: equal and known where P holds.
bool coincident_in(const QualType& q, const MaybeValue& a, const MaybeValue& b,
                   const TypePred& p, const Nat& modulus);

// Gamma restricted to variable typings, top of stack first.
using TypeBindings = std::vector<std::pair<std::string, QualType>>;

bool env_exact_in(const TypeBindings& gamma, const Env& env, const TypePred& p,
                  const Nat& modulus);
bool env_coincident_in(const TypeBindings& gamma, const Env& a, const Env& b,
                       const TypePred& p, const Nat& modulus);

// Streams are exact in d when entries of streams at or below d are known
// naturals/booleans and entries above d are unknown.
bool streams_exact_in(const OutStreams& out, Domain d);

// Streams coincide in d when per-domain lengths agree and streams at or
// below d are equal.
bool streams_coincident_in(const OutStreams& a, const OutStreams& b, Domain d);

// Composite-value exactness: a $post value carries a node agreeing with
// the known value under |.| and under evaluation with any input; a $pre
// value carries no node; a non-public value component is unknown; public
// values are known (recursively for lists).
bool composite_exact(const QualType& q, const CompositeValue& cv,
                     const Circuit& circuit, std::uint64_t pi_seed);

bool env_composite_exact(const TypeBindings& gamma, const CompositeEnv& env,
                         const Circuit& circuit, std::uint64_t pi_seed);

// gamma_C . pi ~ gamma': the compiled environment, evaluated under pi,
// is ~-related to the circuit-semantics environment.
bool env_bullet_sim(const CompositeEnv& comp_env, const Circuit& circuit,
                    const InputAssignment& pi, const Env& circ_env);

// nu . pi ~ streams: dropping the consumed prefix of pi leaves entries
// ~-related to the remaining streams.
bool counters_bullet_sim(std::uint32_t consumed_prover,
                         std::uint32_t consumed_verifier,
                         const InputAssignment& pi, const OutStreams& remaining);

}  // namespace zksc::conf
