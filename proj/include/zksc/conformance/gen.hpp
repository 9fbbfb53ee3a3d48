#pragma once

#include <random>

#include "zksc/ast.hpp"
#include "zksc/typecheck.hpp"
#include "zksc/value.hpp"

namespace zksc::conf {

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 5;
  int max_list_len = 4;
  Nat modulus = 97;

  // Relative construct weights; wire/assert/for are favoured so generated
  // programs exercise streams and unrolling.
  double w_lit = 1.0;
  double w_var = 2.0;
  double w_get = 1.0;
  double w_binop = 2.0;
  double w_assert = 3.0;
  double w_wire = 3.0;
  double w_if = 1.5;
  double w_for = 2.5;
  double w_cast = 1.0;
  double w_let = 2.0;
  double w_seq = 1.5;
  double w_assign = 1.5;
  double w_load = 1.5;

  int prefix_lets_max = 3;
};

// Generates an expression of exactly the target type, inverted from the
// typing rules: every side condition is respected by construction. The
// result is surface syntax; run the typechecker to annotate it.
ExprPtr gen_welltyped(const GenConfig& cfg, std::mt19937_64& rng, TypeEnv& env,
                      const QualType& target);

// A whole program: main whose body is a short let prefix followed by a
// generated subject expression. Untyped surface syntax.
Program gen_program(const GenConfig& cfg, std::uint64_t trial_seed);

// A random core value conforming to the shape of q.
CoreValue random_core_value(std::mt19937_64& rng, const QualType& q,
                            const Nat& modulus, int max_list_len);

// Dictionaries covering every get key of a typechecked program with
// type-conforming values.
Inputs gen_inputs(const GenConfig& cfg, std::mt19937_64& rng, const Program& p);

}  // namespace zksc::conf
