#pragma once

#include <array>
#include <optional>
#include <string>

#include "zksc/ast.hpp"
#include "zksc/conformance/predicates.hpp"
#include "zksc/value.hpp"

namespace zksc::conf {

enum class Theorem : std::uint8_t {
  Exactness,      // values, environments, and streams are exact per view
  Frame,          // only effect domains change in the environment
  Silence,        // no public effect, no circuit output
  CircuitFrame,   // no public effect, circuit-visible environment unchanged
  Safety,         // inputs of higher domains do not influence the run
  Soundness,      // runs in comparable domains agree on visible values
  Correctness,    // a successful prover run replays in the circuit semantics
  CompileExact,   // compilation succeeds and produces exact composites
  CompileCorrect, // circuit-semantics success coincides with acceptance
};

inline constexpr std::array<Theorem, 9> kAllTheorems = {
    Theorem::Exactness,    Theorem::Frame,       Theorem::Silence,
    Theorem::CircuitFrame, Theorem::Safety,      Theorem::Soundness,
    Theorem::Correctness,  Theorem::CompileExact, Theorem::CompileCorrect,
};

const char* theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);

struct Counterexample {
  Theorem theorem;
  std::string program;  // pretty-printed source
  std::string inputs;   // rendered dictionaries
  std::string detail;   // what failed, with the domains involved
};

// Runs one theorem's hypothesis runs on a typechecked program and asserts
// its conclusion. Inputs must cover the program's get sites (validated).
// Failure is a value, not an error.
std::optional<Counterexample> check_theorem(Theorem t, const Program& p,
                                            const Inputs& inputs,
                                            const Nat& modulus);

std::string render_inputs(const Inputs& inputs);

}  // namespace zksc::conf
