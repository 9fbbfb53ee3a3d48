#pragma once

#include <string>

#include "zksc/ast.hpp"

namespace zksc {

// Emits concrete syntax that reparses to a syntactically equal AST.
std::string pretty_print(const Program& p);
std::string pretty_print(const Expr& e);

}  // namespace zksc
