#pragma once

#include <functional>

#include "zksc/ast.hpp"
#include "zksc/conformance/theorems.hpp"

namespace zksc::conf {

// True when the (typechecked) candidate still fails. The callback receives
// a program that already typechecks.
using StillFails = std::function<bool(const Program&)>;

// Iteratively simplifies a failing program: drops sequence arms and let
// bindings, replaces subexpressions by literals of the same type, shrinks
// loop bounds. Every candidate is re-typechecked before being offered.
Program shrink_program(const Program& failing, const Nat& modulus,
                       const StillFails& still_fails, int max_steps = 400);

}  // namespace zksc::conf
