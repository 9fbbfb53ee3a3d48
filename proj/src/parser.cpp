#include "zksc/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace zksc {

namespace {

enum class Tok : std::uint8_t {
  Ident, Number, String, StageTok, DomainTok,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Semi, Colon, Comma, DotDot, Arrow,
  Assign, EqEq, Lt, Le, AndAnd, OrOr,
  Plus, Minus, Star, Slash, Percent,
  KwFn, KwLet, KwMut, KwIf, KwElse, KwFor, KwIn, KwWire, KwAs,
  KwTrue, KwFalse,
  Eof,
};

struct Token {
  Tok kind;
  SourcePos pos;
  std::string text;   // Ident/String
  Nat number;         // Number
  Stage stage = Stage::Pre;
  Domain domain = Domain::Public;
};

const std::set<std::string> kUnsupportedKeywords = {"where", "struct", "ref",
                                                    "rec"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next();
      bool end = t.kind == Tok::Eof;
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  void skip_trivia() {
    for (;;) {
      if (at_end()) return;
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
        while (!at_end() && src_[i_] != '\n') advance();
      } else if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '*') {
        SourcePos open = pos_;
        advance();
        advance();
        for (;;) {
          if (at_end()) throw SyntaxError(open, "unterminated block comment");
          if (src_[i_] == '*' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        return;
      }
    }
  }

  Token next() {
    Token t;
    t.pos = pos_;
    if (at_end()) {
      t.kind = Tok::Eof;
      return t;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        digits += src_[i_];
        advance();
      }
      if (!at_end() && (std::isalpha(static_cast<unsigned char>(src_[i_])) ||
                        src_[i_] == '_'))
        throw SyntaxError(pos_, "identifier may not start with a digit");
      t.kind = Tok::Number;
      t.number = Nat(digits);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = read_name();
      if (kUnsupportedKeywords.count(name))
        throw SyntaxError(t.pos,
                          "'" + name + "' is unsupported in the monomorphic core");
      if (name == "fn") t.kind = Tok::KwFn;
      else if (name == "let") t.kind = Tok::KwLet;
      else if (name == "mut") t.kind = Tok::KwMut;
      else if (name == "if") t.kind = Tok::KwIf;
      else if (name == "else") t.kind = Tok::KwElse;
      else if (name == "for") t.kind = Tok::KwFor;
      else if (name == "in") t.kind = Tok::KwIn;
      else if (name == "wire") t.kind = Tok::KwWire;
      else if (name == "as") t.kind = Tok::KwAs;
      else if (name == "true") t.kind = Tok::KwTrue;
      else if (name == "false") t.kind = Tok::KwFalse;
      else {
        t.kind = Tok::Ident;
        t.text = std::move(name);
      }
      return t;
    }
    if (c == '$') {
      advance();
      std::string name = read_name();
      if (name == "pre") t.stage = Stage::Pre;
      else if (name == "post") t.stage = Stage::Post;
      else throw SyntaxError(t.pos, "unknown stage '$" + name + "'");
      t.kind = Tok::StageTok;
      return t;
    }
    if (c == '@') {
      advance();
      std::string name = read_name();
      if (name == "public") t.domain = Domain::Public;
      else if (name == "verifier") t.domain = Domain::Verifier;
      else if (name == "prover") t.domain = Domain::Prover;
      else throw SyntaxError(t.pos, "unknown domain '@" + name + "'");
      t.kind = Tok::DomainTok;
      return t;
    }
    if (c == '"') {
      advance();
      std::string s;
      for (;;) {
        if (at_end()) throw SyntaxError(t.pos, "unterminated string literal");
        char d = src_[i_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\n') throw SyntaxError(t.pos, "unterminated string literal");
        s += d;
        advance();
      }
      t.kind = Tok::String;
      t.text = std::move(s);
      return t;
    }
    advance();
    switch (c) {
      case '{': t.kind = Tok::LBrace; return t;
      case '}': t.kind = Tok::RBrace; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case '[': t.kind = Tok::LBracket; return t;
      case ']': t.kind = Tok::RBracket; return t;
      case ';': t.kind = Tok::Semi; return t;
      case ':': t.kind = Tok::Colon; return t;
      case ',': t.kind = Tok::Comma; return t;
      case '+': t.kind = Tok::Plus; return t;
      case '*': t.kind = Tok::Star; return t;
      case '/': t.kind = Tok::Slash; return t;
      case '%': t.kind = Tok::Percent; return t;
      case '.':
        if (!at_end() && src_[i_] == '.') {
          advance();
          t.kind = Tok::DotDot;
          return t;
        }
        throw SyntaxError(t.pos, "unexpected '.'");
      case '-':
        if (!at_end() && src_[i_] == '>') {
          advance();
          t.kind = Tok::Arrow;
          return t;
        }
        t.kind = Tok::Minus;
        return t;
      case '=':
        if (!at_end() && src_[i_] == '=') {
          advance();
          t.kind = Tok::EqEq;
          return t;
        }
        t.kind = Tok::Assign;
        return t;
      case '<':
        if (!at_end() && src_[i_] == '=') {
          advance();
          t.kind = Tok::Le;
          return t;
        }
        t.kind = Tok::Lt;
        return t;
      case '&':
        if (!at_end() && src_[i_] == '&') {
          advance();
          t.kind = Tok::AndAnd;
          return t;
        }
        throw SyntaxError(t.pos, "unexpected '&'");
      case '|':
        if (!at_end() && src_[i_] == '|') {
          advance();
          t.kind = Tok::OrOr;
          return t;
        }
        throw SyntaxError(t.pos, "unexpected '|'");
      default:
        throw SyntaxError(t.pos, std::string("unexpected character '") + c + "'");
    }
  }

  std::string read_name() {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                         src_[i_] == '_')) {
      name += src_[i_];
      advance();
    }
    if (name.empty()) throw SyntaxError(pos_, "expected a name");
    return name;
  }

  bool at_end() const { return i_ >= src_.size(); }
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program parse_program() {
    Program p;
    while (!at(Tok::Eof)) p.functions.push_back(parse_fundef());
    check_program_invariants(p);
    return p;
  }

  ExprPtr parse_single_expr() {
    ExprPtr e = parse_expr();
    expect(Tok::Eof, "end of input");
    return e;
  }

 private:
  // --- token plumbing ---
  const Token& peek(std::size_t k = 0) const {
    std::size_t j = i_ + k;
    if (j >= toks_.size()) j = toks_.size() - 1;
    return toks_[j];
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token eat() { return toks_[i_ >= toks_.size() ? toks_.size() - 1 : i_++]; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) throw SyntaxError(peek().pos, "expected " + what);
    return eat();
  }

  // --- program structure ---
  FunDef parse_fundef() {
    FunDef f;
    f.pos = peek().pos;
    expect(Tok::KwFn, "'fn'");
    f.name = expect(Tok::Ident, "function name").text;
    if (at(Tok::LBracket))
      throw SyntaxError(peek().pos,
                        "type parameters are unsupported in the monomorphic core");
    expect(Tok::LParen, "'('");
    if (!at(Tok::RParen)) {
      for (;;) {
        std::string pname = expect(Tok::Ident, "parameter name").text;
        expect(Tok::Colon, "':'");
        QualType q = parse_type();
        for (const auto& [existing, _] : f.params)
          if (existing == pname)
            throw SyntaxError(peek().pos,
                              "duplicate parameter name '" + pname + "'");
        f.params.emplace_back(std::move(pname), std::move(q));
        if (at(Tok::Comma)) {
          eat();
          continue;
        }
        break;
      }
    }
    expect(Tok::RParen, "')'");
    if (at(Tok::Arrow)) {
      eat();
      f.return_type = parse_type();
    }
    f.body = parse_block();
    return f;
  }

  void check_program_invariants(const Program& p) {
    const FunDef* main = nullptr;
    std::set<std::string> names;
    for (const auto& f : p.functions) {
      if (!names.insert(f.name).second)
        throw SyntaxError(f.pos, "duplicate function name '" + f.name + "'");
      if (f.name == "main") main = &f;
    }
    if (!main) throw SyntaxError(SourcePos{}, "program has no 'main' function");
    if (!main->params.empty())
      throw SyntaxError(main->pos, "'main' takes no parameters");
  }

  // --- types ---
  QualType parse_type() {
    SourcePos pos = peek().pos;
    DataType data;
    if (at(Tok::LParen)) {
      eat();
      expect(Tok::RParen, "')' of the unit type");
      data.kind = DataType::Kind::Unit;
    } else if (at(Tok::Ident) && peek().text == "uint") {
      eat();
      data.kind = DataType::Kind::UInt;
      data.has_modulus = parse_modulus_bracket();
    } else if (at(Tok::Ident) && peek().text == "bool") {
      eat();
      data.kind = DataType::Kind::Bool;
      data.has_modulus = parse_modulus_bracket();
    } else if (at(Tok::Ident) && peek().text == "list") {
      eat();
      expect(Tok::LBracket, "'['");
      QualType elem = parse_type();
      expect(Tok::RBracket, "']'");
      data.kind = DataType::Kind::List;
      data.elem = std::make_shared<const QualType>(std::move(elem));
    } else {
      throw SyntaxError(pos, "expected a data type");
    }
    QualType q;
    q.data = std::move(data);
    if (at(Tok::StageTok)) q.stage = eat().stage;
    // An omitted domain is read as @public.
    q.domain = at(Tok::DomainTok) ? eat().domain : Domain::Public;
    return q;
  }

  bool parse_modulus_bracket() {
    if (!at(Tok::LBracket)) return false;
    eat();
    Token t = expect(Tok::Ident, "the modulus parameter N");
    if (t.text != "N")
      throw SyntaxError(t.pos, "the modulus must be the global parameter N");
    expect(Tok::RBracket, "']'");
    return true;
  }

  // --- blocks and statements ---
  ExprPtr parse_block() {
    expect(Tok::LBrace, "'{'");
    ExprPtr body = parse_block_items();
    expect(Tok::RBrace, "'}'");
    return body;
  }

  ExprPtr parse_block_items() {
    SourcePos pos = peek().pos;
    if (at(Tok::RBrace)) return make_expr(UnitLit{}, pos);
    if (at(Tok::KwLet)) {
      eat();
      LetExpr let;
      if (at(Tok::KwMut)) {
        eat();
        let.is_mut = true;
      }
      let.var = expect(Tok::Ident, "variable name").text;
      if (at(Tok::Colon)) {
        eat();
        let.annotation = parse_type();
      }
      expect(Tok::Assign, "'='");
      let.bound = parse_expr();
      expect(Tok::Semi, "';' after let");
      let.rest = parse_block_items();
      return make_expr(std::move(let), pos);
    }
    ExprPtr e = parse_expr();
    if (at(Tok::Semi)) {
      eat();
      ExprPtr rest = parse_block_items();
      return make_expr(SeqExpr{std::move(e), std::move(rest)}, pos);
    }
    if (at(Tok::RBrace)) return e;
    // Large expressions may omit the separating semicolon.
    if (is_large(*e)) {
      ExprPtr rest = parse_block_items();
      return make_expr(SeqExpr{std::move(e), std::move(rest)}, pos);
    }
    throw SyntaxError(peek().pos, "expected ';' or '}'");
  }

  static bool is_large(const Expr& e) {
    return e.is<IfExpr>() || e.is<ForExpr>() || e.is<WireExpr>();
  }

  // --- expressions ---
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_or();
    if (at(Tok::Assign)) {
      SourcePos pos = peek().pos;
      eat();
      LValue lv = to_lvalue(std::move(lhs), pos);
      SourcePos lv_pos = lv.pos;
      ExprPtr rhs = parse_expr();
      return make_expr(AssignExpr{std::move(lv), std::move(rhs)}, lv_pos);
    }
    return lhs;
  }

  LValue to_lvalue(ExprPtr e, SourcePos at_pos) {
    if (auto* v = e->as<VarRef>()) {
      LValue lv;
      lv.var = v->name;
      lv.pos = e->pos;
      return lv;
    }
    if (auto* l = e->as<LoadExpr>()) {
      LValue lv = std::move(l->lv);
      lv.indices.push_back(std::move(l->index));
      return lv;
    }
    throw SyntaxError(at_pos, "left side of '=' is not an lvalue");
  }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (at(Tok::OrOr)) {
      SourcePos pos = peek().pos;
      eat();
      ExprPtr rhs = parse_and();
      e = make_expr(BinOp{BinOpKind::Or, std::move(e), std::move(rhs)}, pos);
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_cmp();
    while (at(Tok::AndAnd)) {
      SourcePos pos = peek().pos;
      eat();
      ExprPtr rhs = parse_cmp();
      e = make_expr(BinOp{BinOpKind::And, std::move(e), std::move(rhs)}, pos);
    }
    return e;
  }

  ExprPtr parse_cmp() {
    ExprPtr e = parse_add();
    while (at(Tok::EqEq) || at(Tok::Lt) || at(Tok::Le)) {
      SourcePos pos = peek().pos;
      BinOpKind op = at(Tok::EqEq)  ? BinOpKind::Eq
                     : at(Tok::Lt) ? BinOpKind::Lt
                                   : BinOpKind::Le;
      eat();
      ExprPtr rhs = parse_add();
      e = make_expr(BinOp{op, std::move(e), std::move(rhs)}, pos);
    }
    return e;
  }

  ExprPtr parse_add() {
    ExprPtr e = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      SourcePos pos = peek().pos;
      BinOpKind op = at(Tok::Plus) ? BinOpKind::Add : BinOpKind::Sub;
      eat();
      ExprPtr rhs = parse_mul();
      e = make_expr(BinOp{op, std::move(e), std::move(rhs)}, pos);
    }
    return e;
  }

  ExprPtr parse_mul() {
    ExprPtr e = parse_postfix();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Percent)) {
      SourcePos pos = peek().pos;
      BinOpKind op = at(Tok::Star)    ? BinOpKind::Mul
                     : at(Tok::Slash) ? BinOpKind::Div
                                      : BinOpKind::Mod;
      eat();
      ExprPtr rhs = parse_postfix();
      e = make_expr(BinOp{op, std::move(e), std::move(rhs)}, pos);
    }
    return e;
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      if (at(Tok::LBracket)) {
        SourcePos pos = peek().pos;
        eat();
        ExprPtr idx = parse_expr();
        expect(Tok::RBracket, "']'");
        LValue lv = to_lvalue(std::move(e), pos);
        e = make_expr(LoadExpr{std::move(lv), std::move(idx)}, pos);
      } else if (at(Tok::KwAs)) {
        SourcePos pos = peek().pos;
        eat();
        CastTarget target;
        if (at(Tok::StageTok)) {
          target.kind = CastTarget::Kind::StageOnly;
          target.stage = eat().stage;
        } else if (at(Tok::DomainTok)) {
          target.kind = CastTarget::Kind::DomainOnly;
          target.domain = eat().domain;
        } else {
          target.kind = CastTarget::Kind::Type;
          target.type = parse_type();
        }
        e = make_expr(CastExpr{std::move(e), std::move(target)}, pos);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_primary() {
    SourcePos pos = peek().pos;
    switch (peek().kind) {
      case Tok::Number: {
        Token t = eat();
        return make_expr(NatLit{std::move(t.number)}, pos);
      }
      case Tok::KwTrue:
        eat();
        return make_expr(BoolLit{true}, pos);
      case Tok::KwFalse:
        eat();
        return make_expr(BoolLit{false}, pos);
      case Tok::LParen: {
        eat();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBrace:
        return parse_block();
      case Tok::KwIf: {
        eat();
        ExprPtr guard = parse_expr();
        ExprPtr then_e = parse_block();
        ExprPtr else_e;
        if (at(Tok::KwElse)) {
          eat();
          else_e = parse_block();
        } else {
          // if without else desugars to else {} (unit).
          else_e = make_expr(UnitLit{}, pos);
        }
        return make_expr(
            IfExpr{std::move(guard), std::move(then_e), std::move(else_e)}, pos);
      }
      case Tok::KwFor: {
        eat();
        std::string var = expect(Tok::Ident, "loop variable").text;
        expect(Tok::KwIn, "'in'");
        ExprPtr lo = parse_expr();
        expect(Tok::DotDot, "'..'");
        ExprPtr hi = parse_expr();
        ExprPtr body = parse_block();
        return make_expr(ForExpr{std::move(var), std::move(lo), std::move(hi),
                                 std::move(body)},
                         pos);
      }
      case Tok::KwWire: {
        eat();
        ExprPtr body = parse_block();
        return make_expr(WireExpr{std::move(body)}, pos);
      }
      case Tok::Ident: {
        Token name = eat();
        if (!at(Tok::LParen)) return make_expr(VarRef{name.text}, pos);
        eat();
        if (name.text == "assert" || name.text == "assert_zero") {
          ExprPtr arg = parse_expr();
          expect(Tok::RParen, "')'");
          if (name.text == "assert")
            return make_expr(AssertExpr{std::move(arg)}, pos);
          return make_expr(AssertZeroExpr{std::move(arg)}, pos);
        }
        if (name.text == "get_public" || name.text == "get_instance" ||
            name.text == "get_witness") {
          Token key = expect(Tok::String, "a string key");
          expect(Tok::RParen, "')'");
          GetExpr g;
          g.source = name.text == "get_public"     ? Domain::Public
                     : name.text == "get_instance" ? Domain::Verifier
                                                   : Domain::Prover;
          g.key = key.text;
          return make_expr(std::move(g), pos);
        }
        CallExpr call;
        call.name = name.text;
        if (!at(Tok::RParen)) {
          for (;;) {
            call.args.push_back(parse_expr());
            if (at(Tok::Comma)) {
              eat();
              continue;
            }
            break;
          }
        }
        expect(Tok::RParen, "')'");
        return make_expr(std::move(call), pos);
      }
      default:
        throw SyntaxError(pos, "expected an expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse(std::string_view source) {
  Parser parser(Lexer(source).run());
  return parser.parse_program();
}

ExprPtr parse_expr(std::string_view source) {
  Parser parser(Lexer(source).run());
  return parser.parse_single_expr();
}

}  // namespace zksc
