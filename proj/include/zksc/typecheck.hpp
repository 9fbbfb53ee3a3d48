#pragma once

#include <string>
#include <vector>

#include "zksc/ast.hpp"
#include "zksc/nat.hpp"

namespace zksc {

// A type environment entry: either a variable typing (x : q) or a
// mutability statement (mut x : b). Operated as a stack; lookup finds the
// entry nearest the top.
struct TypeEnvEntry {
  enum class Kind : std::uint8_t { Typing, Mutability };
  Kind kind;
  std::string var;
  QualType type;   // Typing
  bool is_mut = false;  // Mutability
};

class TypeEnv {
 public:
  void push_typing(const std::string& var, QualType q);
  void push_mutability(const std::string& var, bool is_mut);
  void pop(std::size_t n = 1);
  std::size_t size() const { return entries_.size(); }

  const QualType* lookup(const std::string& var) const;
  const bool* lookup_mut(const std::string& var) const;

  // The variables of typing entries, top of stack first.
  std::vector<std::pair<std::string, QualType>> typings() const;

 private:
  std::vector<TypeEnvEntry> entries_;  // top of stack at the back
};

EffectSet stage_effect(Stage s);

// Result of typechecking an expression: its qualified type and effect set.
// The same data is also written onto the Expr nodes in place.
struct TypedResult {
  QualType type;
  EffectSet effect;
};

// Decomposition of an lvalue x[y1]...[yn] against the environment.
struct LValueTyping {
  QualType root;                 // env(x)
  std::vector<Domain> index_domains;  // d1 .. dn
  QualType element;              // type of the addressed cell
  EffectSet effect;              // union of index effects
};

class Typechecker {
 public:
  explicit Typechecker(Nat modulus) : modulus_(std::move(modulus)) {}

  // Checks an expression, annotating every node with its type and effect.
  // `expected`, when present, guides local inference (literal defaults,
  // get annotations, omitted stages); the result is verified against it.
  TypedResult check_expr(TypeEnv& env, Expr& e,
                         const QualType* expected = nullptr);

  LValueTyping check_lvalue(TypeEnv& env, LValue& lv);

  const Nat& modulus() const { return modulus_; }

 private:
  Nat modulus_;
};

// Typechecks main's body in the empty environment, annotating the AST in
// place. Throws TypeError on the first failure.
void typecheck_program(Program& p, const Nat& modulus);

}  // namespace zksc
