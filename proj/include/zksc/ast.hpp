#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zksc/nat.hpp"
#include "zksc/source.hpp"
#include "zksc/types.hpp"

namespace zksc {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinOpKind : std::uint8_t {
  Add, Sub, Mul, Div, Mod, Eq, Lt, Le, And, Or,
};

const char* binop_token(BinOpKind op);
bool binop_is_arith(BinOpKind op);    // + - * / %
bool binop_is_compare(BinOpKind op);  // == < <=
bool binop_is_logic(BinOpKind op);    // && ||
bool binop_post_allowed(BinOpKind op);  // + - * only

// A variable followed by zero or more index expressions: x[y1][y2]...[yn].
struct LValue {
  std::string var;
  std::vector<ExprPtr> indices;
  SourcePos pos;
};

struct UnitLit {};  // the missing expression epsilon
struct NatLit { Nat value; };
struct BoolLit { bool value; };
struct VarRef { std::string name; };
struct BinOp {
  BinOpKind op;
  ExprPtr lhs, rhs;
};
struct AssertExpr { ExprPtr arg; };
struct AssertZeroExpr { ExprPtr arg; };
struct GetExpr {
  Domain source;
  std::string key;
  // Resolved by the typechecker from the surrounding context; never filled
  // by the parser. Excluded from syntactic equality.
  std::optional<QualType> annotation;
};
struct IfExpr { ExprPtr guard, then_e, else_e; };
struct ForExpr {
  std::string var;
  ExprPtr lo, hi, body;
};
struct WireExpr { ExprPtr body; };

struct CastTarget {
  enum class Kind : std::uint8_t { Type, StageOnly, DomainOnly };
  Kind kind = Kind::Type;
  QualType type;   // Kind::Type
  Stage stage = Stage::Pre;    // Kind::StageOnly
  Domain domain = Domain::Public;  // Kind::DomainOnly
};
struct CastExpr {
  ExprPtr body;
  CastTarget target;
};
struct AssignExpr {
  LValue lv;
  ExprPtr rhs;
};
// lv followed by one more index: lv[index].
struct LoadExpr {
  LValue lv;
  ExprPtr index;
};
struct LetExpr {
  bool is_mut = false;
  std::string var;
  std::optional<QualType> annotation;
  ExprPtr bound;
  ExprPtr rest;
};
struct SeqExpr { ExprPtr first, rest; };
// Parsed but rejected by the typechecker: the monomorphic core has no
// user-defined function calls.
struct CallExpr {
  std::string name;
  std::vector<ExprPtr> args;
};

using ExprNode =
    std::variant<UnitLit, NatLit, BoolLit, VarRef, BinOp, AssertExpr,
                 AssertZeroExpr, GetExpr, IfExpr, ForExpr, WireExpr, CastExpr,
                 AssignExpr, LoadExpr, LetExpr, SeqExpr, CallExpr>;

struct Expr {
  ExprNode node;
  SourcePos pos;

  // Filled by the typechecker.
  std::optional<QualType> type;
  EffectSet effect;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  T* as() { return std::get_if<T>(&node); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node); }
};

ExprPtr make_expr(ExprNode node, SourcePos pos);
ExprPtr clone_expr(const Expr& e);
LValue clone_lvalue(const LValue& lv);

// Structural equality on surface syntax. Ignores positions and everything
// the typechecker fills in (types, effects, get annotations).
bool equal_syntax(const Expr& a, const Expr& b);

struct FunDef {
  std::string name;
  std::vector<std::pair<std::string, QualType>> params;
  std::optional<QualType> return_type;
  ExprPtr body;
  SourcePos pos;
};

struct Program {
  std::vector<FunDef> functions;

  const FunDef& main() const;
  FunDef& main();
};

Program clone_program(const Program& p);
bool equal_syntax(const Program& a, const Program& b);

}  // namespace zksc
