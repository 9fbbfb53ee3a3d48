#include "zksc/ast.hpp"

#include <stdexcept>

namespace zksc {

const char* binop_token(BinOpKind op) {
  switch (op) {
    case BinOpKind::Add: return "+";
    case BinOpKind::Sub: return "-";
    case BinOpKind::Mul: return "*";
    case BinOpKind::Div: return "/";
    case BinOpKind::Mod: return "%";
    case BinOpKind::Eq: return "==";
    case BinOpKind::Lt: return "<";
    case BinOpKind::Le: return "<=";
    case BinOpKind::And: return "&&";
    case BinOpKind::Or: return "||";
  }
  return "?";
}

bool binop_is_arith(BinOpKind op) {
  switch (op) {
    case BinOpKind::Add:
    case BinOpKind::Sub:
    case BinOpKind::Mul:
    case BinOpKind::Div:
    case BinOpKind::Mod: return true;
    default: return false;
  }
}

bool binop_is_compare(BinOpKind op) {
  return op == BinOpKind::Eq || op == BinOpKind::Lt || op == BinOpKind::Le;
}

bool binop_is_logic(BinOpKind op) {
  return op == BinOpKind::And || op == BinOpKind::Or;
}

bool binop_post_allowed(BinOpKind op) {
  return op == BinOpKind::Add || op == BinOpKind::Sub || op == BinOpKind::Mul;
}

ExprPtr make_expr(ExprNode node, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->node = std::move(node);
  e->pos = pos;
  return e;
}

LValue clone_lvalue(const LValue& lv) {
  LValue out;
  out.var = lv.var;
  out.pos = lv.pos;
  out.indices.reserve(lv.indices.size());
  for (const auto& i : lv.indices) out.indices.push_back(clone_expr(*i));
  return out;
}

ExprPtr clone_expr(const Expr& e) {
  ExprNode node = std::visit(
      [](const auto& n) -> ExprNode {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnitLit> || std::is_same_v<T, NatLit> ||
                      std::is_same_v<T, BoolLit> || std::is_same_v<T, VarRef> ||
                      std::is_same_v<T, GetExpr>) {
          return n;
        } else if constexpr (std::is_same_v<T, BinOp>) {
          return BinOp{n.op, clone_expr(*n.lhs), clone_expr(*n.rhs)};
        } else if constexpr (std::is_same_v<T, AssertExpr>) {
          return AssertExpr{clone_expr(*n.arg)};
        } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
          return AssertZeroExpr{clone_expr(*n.arg)};
        } else if constexpr (std::is_same_v<T, IfExpr>) {
          return IfExpr{clone_expr(*n.guard), clone_expr(*n.then_e),
                        clone_expr(*n.else_e)};
        } else if constexpr (std::is_same_v<T, ForExpr>) {
          return ForExpr{n.var, clone_expr(*n.lo), clone_expr(*n.hi),
                         clone_expr(*n.body)};
        } else if constexpr (std::is_same_v<T, WireExpr>) {
          return WireExpr{clone_expr(*n.body)};
        } else if constexpr (std::is_same_v<T, CastExpr>) {
          return CastExpr{clone_expr(*n.body), n.target};
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          return AssignExpr{clone_lvalue(n.lv), clone_expr(*n.rhs)};
        } else if constexpr (std::is_same_v<T, LoadExpr>) {
          return LoadExpr{clone_lvalue(n.lv), clone_expr(*n.index)};
        } else if constexpr (std::is_same_v<T, LetExpr>) {
          return LetExpr{n.is_mut, n.var, n.annotation, clone_expr(*n.bound),
                         clone_expr(*n.rest)};
        } else if constexpr (std::is_same_v<T, SeqExpr>) {
          return SeqExpr{clone_expr(*n.first), clone_expr(*n.rest)};
        } else {
          static_assert(std::is_same_v<T, CallExpr>);
          CallExpr c;
          c.name = n.name;
          for (const auto& a : n.args) c.args.push_back(clone_expr(*a));
          return c;
        }
      },
      e.node);
  auto out = make_expr(std::move(node), e.pos);
  out->type = e.type;
  out->effect = e.effect;
  return out;
}

namespace {

bool equal_opt_type(const std::optional<QualType>& a,
                    const std::optional<QualType>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

bool equal_lvalue(const LValue& a, const LValue& b) {
  if (a.var != b.var || a.indices.size() != b.indices.size()) return false;
  for (std::size_t i = 0; i < a.indices.size(); ++i)
    if (!equal_syntax(*a.indices[i], *b.indices[i])) return false;
  return true;
}

}  // namespace

bool equal_syntax(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, UnitLit>) {
          return true;
        } else if constexpr (std::is_same_v<T, NatLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, BinOp>) {
          return x.op == y.op && equal_syntax(*x.lhs, *y.lhs) &&
                 equal_syntax(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, AssertExpr>) {
          return equal_syntax(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
          return equal_syntax(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, GetExpr>) {
          // The annotation is typechecker-resolved, not surface syntax.
          return x.source == y.source && x.key == y.key;
        } else if constexpr (std::is_same_v<T, IfExpr>) {
          return equal_syntax(*x.guard, *y.guard) &&
                 equal_syntax(*x.then_e, *y.then_e) &&
                 equal_syntax(*x.else_e, *y.else_e);
        } else if constexpr (std::is_same_v<T, ForExpr>) {
          return x.var == y.var && equal_syntax(*x.lo, *y.lo) &&
                 equal_syntax(*x.hi, *y.hi) && equal_syntax(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, WireExpr>) {
          return equal_syntax(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, CastExpr>) {
          if (x.target.kind != y.target.kind) return false;
          switch (x.target.kind) {
            case CastTarget::Kind::Type:
              if (!(x.target.type == y.target.type)) return false;
              break;
            case CastTarget::Kind::StageOnly:
              if (x.target.stage != y.target.stage) return false;
              break;
            case CastTarget::Kind::DomainOnly:
              if (x.target.domain != y.target.domain) return false;
              break;
          }
          return equal_syntax(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          return equal_lvalue(x.lv, y.lv) && equal_syntax(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, LoadExpr>) {
          return equal_lvalue(x.lv, y.lv) && equal_syntax(*x.index, *y.index);
        } else if constexpr (std::is_same_v<T, LetExpr>) {
          return x.is_mut == y.is_mut && x.var == y.var &&
                 equal_opt_type(x.annotation, y.annotation) &&
                 equal_syntax(*x.bound, *y.bound) &&
                 equal_syntax(*x.rest, *y.rest);
        } else if constexpr (std::is_same_v<T, SeqExpr>) {
          return equal_syntax(*x.first, *y.first) &&
                 equal_syntax(*x.rest, *y.rest);
        } else {
          static_assert(std::is_same_v<T, CallExpr>);
          if (x.name != y.name || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!equal_syntax(*x.args[i], *y.args[i])) return false;
          return true;
        }
      },
      a.node);
}

const FunDef& Program::main() const {
  for (const auto& f : functions)
    if (f.name == "main") return f;
  throw std::logic_error("program has no main");
}

FunDef& Program::main() {
  for (auto& f : functions)
    if (f.name == "main") return f;
  throw std::logic_error("program has no main");
}

Program clone_program(const Program& p) {
  Program out;
  for (const auto& f : p.functions) {
    FunDef g;
    g.name = f.name;
    g.params = f.params;
    g.return_type = f.return_type;
    g.body = clone_expr(*f.body);
    g.pos = f.pos;
    out.functions.push_back(std::move(g));
  }
  return out;
}

bool equal_syntax(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const FunDef& f = a.functions[i];
    const FunDef& g = b.functions[i];
    if (f.name != g.name || f.params.size() != g.params.size()) return false;
    for (std::size_t j = 0; j < f.params.size(); ++j) {
      if (f.params[j].first != g.params[j].first) return false;
      if (!(f.params[j].second == g.params[j].second)) return false;
    }
    if (f.return_type.has_value() != g.return_type.has_value()) return false;
    if (f.return_type && !(*f.return_type == *g.return_type)) return false;
    if (!equal_syntax(*f.body, *g.body)) return false;
  }
  return true;
}

}  // namespace zksc
