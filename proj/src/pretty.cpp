#include "zksc/pretty.hpp"

#include <sstream>

namespace zksc {

namespace {

// Binding strength, loosest first. Mirrors the parser's precedence levels.
enum Prec : int {
  PrecExpr = 0,     // assignment
  PrecOr = 1,
  PrecAnd = 2,
  PrecCmp = 3,
  PrecAdd = 4,
  PrecMul = 5,
  PrecPostfix = 6,  // index / cast
  PrecPrimary = 7,
};

int binop_prec(BinOpKind op) {
  switch (op) {
    case BinOpKind::Or: return PrecOr;
    case BinOpKind::And: return PrecAnd;
    case BinOpKind::Eq:
    case BinOpKind::Lt:
    case BinOpKind::Le: return PrecCmp;
    case BinOpKind::Add:
    case BinOpKind::Sub: return PrecAdd;
    case BinOpKind::Mul:
    case BinOpKind::Div:
    case BinOpKind::Mod: return PrecMul;
  }
  return PrecPrimary;
}

class Printer {
 public:
  std::string run(const Program& p) {
    for (const auto& f : p.functions) print_fundef(f);
    return std::move(out_).str();
  }

  std::string run_expr(const Expr& e) {
    print(e, PrecExpr);
    return std::move(out_).str();
  }

 private:
  void print_fundef(const FunDef& f) {
    out_ << "fn " << f.name << "(";
    bool first = true;
    for (const auto& [name, q] : f.params) {
      if (!first) out_ << ", ";
      first = false;
      out_ << name << " : " << type_text(q);
    }
    out_ << ")";
    if (f.return_type) out_ << " -> " << type_text(*f.return_type);
    out_ << " ";
    print_block(*f.body);
    out_ << "\n";
  }

  std::string type_text(const QualType& q) { return to_string(q); }

  void indent() {
    for (int i = 0; i < depth_; ++i) out_ << "    ";
  }

  // A block: statements from the Seq/Let spine, then the trailing value.
  void print_block(const Expr& e) {
    out_ << "{\n";
    ++depth_;
    print_items(e);
    --depth_;
    indent();
    out_ << "}";
  }

  void print_items(const Expr& e) {
    if (const auto* let = e.as<LetExpr>()) {
      indent();
      out_ << "let ";
      if (let->is_mut) out_ << "mut ";
      out_ << let->var;
      if (let->annotation) out_ << " : " << type_text(*let->annotation);
      out_ << " = ";
      print(*let->bound, PrecExpr);
      out_ << ";\n";
      print_items(*let->rest);
      return;
    }
    if (const auto* seq = e.as<SeqExpr>()) {
      indent();
      print(*seq->first, PrecExpr);
      out_ << ";\n";
      print_items(*seq->rest);
      return;
    }
    if (e.is<UnitLit>()) return;  // the missing trailing expression
    indent();
    print(e, PrecExpr);
    out_ << "\n";
  }

  void parenthesize(const Expr& e, int min_prec, int own_prec) {
    if (own_prec < min_prec) {
      out_ << "(";
      print_node(e);
      out_ << ")";
    } else {
      print_node(e);
    }
  }

  void print(const Expr& e, int min_prec) {
    parenthesize(e, min_prec, prec_of(e));
  }

  int prec_of(const Expr& e) {
    if (e.is<AssignExpr>()) return PrecExpr;
    if (const auto* b = e.as<BinOp>()) return binop_prec(b->op);
    if (e.is<CastExpr>() || e.is<LoadExpr>()) return PrecPostfix;
    return PrecPrimary;
  }

  void print_lvalue(const LValue& lv) {
    out_ << lv.var;
    for (const auto& i : lv.indices) {
      out_ << "[";
      print(*i, PrecExpr);
      out_ << "]";
    }
  }

  void print_node(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, UnitLit>) {
            out_ << "{ }";
          } else if constexpr (std::is_same_v<T, NatLit>) {
            out_ << nat_to_string(n.value);
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            out_ << (n.value ? "true" : "false");
          } else if constexpr (std::is_same_v<T, VarRef>) {
            out_ << n.name;
          } else if constexpr (std::is_same_v<T, BinOp>) {
            int p = binop_prec(n.op);
            print(*n.lhs, p);
            out_ << " " << binop_token(n.op) << " ";
            print(*n.rhs, p + 1);
          } else if constexpr (std::is_same_v<T, AssertExpr>) {
            out_ << "assert(";
            print(*n.arg, PrecExpr);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
            out_ << "assert_zero(";
            print(*n.arg, PrecExpr);
            out_ << ")";
          } else if constexpr (std::is_same_v<T, GetExpr>) {
            out_ << (n.source == Domain::Public     ? "get_public"
                     : n.source == Domain::Verifier ? "get_instance"
                                                    : "get_witness")
                 << "(\"" << n.key << "\")";
          } else if constexpr (std::is_same_v<T, IfExpr>) {
            out_ << "if ";
            print(*n.guard, PrecOr);
            out_ << " ";
            print_block(*n.then_e);
            out_ << " else ";
            print_block(*n.else_e);
          } else if constexpr (std::is_same_v<T, ForExpr>) {
            out_ << "for " << n.var << " in ";
            print(*n.lo, PrecOr);
            out_ << " .. ";
            print(*n.hi, PrecOr);
            out_ << " ";
            print_block(*n.body);
          } else if constexpr (std::is_same_v<T, WireExpr>) {
            out_ << "wire ";
            print_block(*n.body);
          } else if constexpr (std::is_same_v<T, CastExpr>) {
            print(*n.body, PrecPostfix);
            out_ << " as ";
            switch (n.target.kind) {
              case CastTarget::Kind::Type:
                out_ << type_text(n.target.type);
                break;
              case CastTarget::Kind::StageOnly:
                out_ << stage_token(n.target.stage);
                break;
              case CastTarget::Kind::DomainOnly:
                out_ << domain_token(n.target.domain);
                break;
            }
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            print_lvalue(n.lv);
            out_ << " = ";
            print(*n.rhs, PrecExpr);
          } else if constexpr (std::is_same_v<T, LoadExpr>) {
            print_lvalue(n.lv);
            out_ << "[";
            print(*n.index, PrecExpr);
            out_ << "]";
          } else if constexpr (std::is_same_v<T, LetExpr> ||
                               std::is_same_v<T, SeqExpr>) {
            // A let/seq used in expression position prints as a block.
            print_block(e);
          } else {
            static_assert(std::is_same_v<T, CallExpr>);
            out_ << n.name << "(";
            bool first = true;
            for (const auto& a : n.args) {
              if (!first) out_ << ", ";
              first = false;
              print(*a, PrecExpr);
            }
            out_ << ")";
          }
        },
        e.node);
  }

  std::ostringstream out_;
  int depth_ = 0;
};

}  // namespace

std::string pretty_print(const Program& p) { return Printer().run(p); }

std::string pretty_print(const Expr& e) { return Printer().run_expr(e); }

}  // namespace zksc
