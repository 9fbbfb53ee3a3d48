#pragma once

#include <string_view>

#include "zksc/ast.hpp"

namespace zksc {

// Parses a whole source file. Throws SyntaxError with position on
// malformed input. Checks the Program invariants (unique function names,
// one zero-parameter main, distinct parameter names).
Program parse(std::string_view source);

// Parses a single expression (test convenience).
ExprPtr parse_expr(std::string_view source);

}  // namespace zksc
