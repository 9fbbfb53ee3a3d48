#include "zksc/typecheck.hpp"

#include <algorithm>

namespace zksc {

void TypeEnv::push_typing(const std::string& var, QualType q) {
  TypeEnvEntry e;
  e.kind = TypeEnvEntry::Kind::Typing;
  e.var = var;
  e.type = std::move(q);
  entries_.push_back(std::move(e));
}

void TypeEnv::push_mutability(const std::string& var, bool is_mut) {
  TypeEnvEntry e;
  e.kind = TypeEnvEntry::Kind::Mutability;
  e.var = var;
  e.is_mut = is_mut;
  entries_.push_back(std::move(e));
}

void TypeEnv::pop(std::size_t n) {
  entries_.resize(entries_.size() - n);
}

const QualType* TypeEnv::lookup(const std::string& var) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->kind == TypeEnvEntry::Kind::Typing && it->var == var)
      return &it->type;
  return nullptr;
}

const bool* TypeEnv::lookup_mut(const std::string& var) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->kind == TypeEnvEntry::Kind::Mutability && it->var == var)
      return &it->is_mut;
  return nullptr;
}

std::vector<std::pair<std::string, QualType>> TypeEnv::typings() const {
  std::vector<std::pair<std::string, QualType>> out;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->kind == TypeEnvEntry::Kind::Typing)
      out.emplace_back(it->var, it->type);
  return out;
}

EffectSet stage_effect(Stage s) { return EffectSet::of_stage(s); }

namespace {

// A partial expected type used for local inference: literal defaults, get
// annotations, and omitted-stage resolution. Components set here are
// verified against the derived type.
struct Expect {
  std::optional<DataType> data;
  std::optional<Stage> stage;
  std::optional<Domain> domain;

  static Expect none() { return {}; }
  static Expect of(const QualType& q) {
    Expect e;
    e.data = q.data;
    e.stage = q.stage;
    e.domain = q.domain;
    return e;
  }
};

// Literals are the weakest source of type information, unannotated gets
// next; binop operands are checked strongest-first so the weaker side can
// take its type from the stronger one.
int inference_weakness(const Expr& e) {
  if (e.is<NatLit>() || e.is<BoolLit>()) return 2;
  if (const auto* g = e.as<GetExpr>(); g && !g->annotation) return 1;
  return 0;
}

class Checker {
 public:
  explicit Checker(const Nat& modulus) : modulus_(modulus) {}

  TypedResult check(TypeEnv& env, Expr& e, const Expect& expect) {
    TypedResult r = std::visit(
        [&](auto& n) -> TypedResult { return check_node(env, e, n, expect); },
        e.node);
    verify(r.type, expect, e.pos);
    e.type = r.type;
    e.effect = r.effect;
    return r;
  }

  LValueTyping check_lvalue(TypeEnv& env, LValue& lv) {
    const QualType* root = env.lookup(lv.var);
    if (!root)
      throw TypeError(TypeErrorCode::UnknownVariable, lv.pos,
                      "unknown variable '" + lv.var + "'");
    LValueTyping out;
    out.root = *root;
    out.effect = EffectSet::empty();
    QualType cur = *root;
    for (auto& idx : lv.indices) {
      if (cur.data.kind != DataType::Kind::List)
        throw TypeError(TypeErrorCode::TypeMismatch, idx->pos,
                        "indexing a value of non-list type " + to_string(cur));
      Expect ie;
      ie.data = DataType{DataType::Kind::UInt, false, nullptr};
      ie.stage = cur.stage_or_pre();
      ie.domain = cur.domain;
      TypedResult ir = check(env, *idx, ie);
      out.index_domains.push_back(cur.domain);
      out.effect = out.effect.unite(ir.effect);
      cur = *cur.data.elem;
    }
    out.element = cur;
    return out;
  }

 private:
  void verify(const QualType& q, const Expect& expect, SourcePos pos) {
    if (expect.data && !(q.data == *expect.data))
      throw TypeError(TypeErrorCode::TypeMismatch, pos,
                      "expected data type " + to_string(*expect.data) +
                          ", found " + to_string(q.data));
    if (expect.stage && q.stage_or_pre() != *expect.stage)
      throw TypeError(TypeErrorCode::StageMismatch, pos,
                      std::string("expected stage ") +
                          stage_token(*expect.stage) + ", found " +
                          stage_token(q.stage_or_pre()));
    if (expect.domain && q.domain != *expect.domain)
      throw TypeError(TypeErrorCode::DomainMismatch, pos,
                      std::string("expected domain ") +
                          domain_token(*expect.domain) + ", found " +
                          domain_token(q.domain));
  }

  TypedResult check_node(TypeEnv&, Expr&, UnitLit&, const Expect&) {
    return {unit_type(), EffectSet::empty()};
  }

  TypedResult check_node(TypeEnv&, Expr& e, NatLit&, const Expect& expect) {
    DataType data{DataType::Kind::UInt, true, nullptr};
    if (expect.data) {
      if (expect.data->kind != DataType::Kind::UInt)
        throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                        "integer literal where " + to_string(*expect.data) +
                            " is expected");
      data = *expect.data;
    }
    Stage s = expect.stage.value_or(Stage::Pre);
    Domain d = expect.domain.value_or(Domain::Public);
    if (!data.has_modulus && s == Stage::Post)
      throw TypeError(TypeErrorCode::StageMismatch, e.pos,
                      "unbounded uint exists only in stage $pre");
    QualType q;
    q.data = data;
    q.stage = s;
    q.domain = d;
    return {q, EffectSet::of_stage(s)};
  }

  TypedResult check_node(TypeEnv&, Expr& e, BoolLit&, const Expect& expect) {
    DataType data{DataType::Kind::Bool, true, nullptr};
    if (expect.data) {
      if (expect.data->kind != DataType::Kind::Bool)
        throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                        "boolean literal where " + to_string(*expect.data) +
                            " is expected");
      data = *expect.data;
    }
    Stage s = expect.stage.value_or(Stage::Pre);
    Domain d = expect.domain.value_or(Domain::Public);
    if (!data.has_modulus && s == Stage::Post)
      throw TypeError(TypeErrorCode::StageMismatch, e.pos,
                      "unbounded bool exists only in stage $pre");
    QualType q;
    q.data = data;
    q.stage = s;
    q.domain = d;
    return {q, EffectSet::of_stage(s)};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, VarRef& n, const Expect&) {
    const QualType* q = env.lookup(n.name);
    if (!q)
      throw TypeError(TypeErrorCode::UnknownVariable, e.pos,
                      "unknown variable '" + n.name + "'");
    return {*q, EffectSet::empty()};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, BinOp& n, const Expect& expect) {
    bool pre_only = !binop_post_allowed(n.op);
    Expect operand;
    if (binop_is_arith(n.op)) {
      if (expect.data) {
        if (expect.data->kind != DataType::Kind::UInt)
          throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                          std::string("operator '") + binop_token(n.op) +
                              "' produces uint, but " +
                              to_string(*expect.data) + " is expected");
        operand.data = *expect.data;
      }
      operand.stage = pre_only ? std::optional<Stage>(Stage::Pre) : expect.stage;
      operand.domain = expect.domain;
    } else if (binop_is_logic(n.op)) {
      if (expect.data) {
        if (expect.data->kind != DataType::Kind::Bool)
          throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                          std::string("operator '") + binop_token(n.op) +
                              "' produces bool, but " +
                              to_string(*expect.data) + " is expected");
        operand.data = *expect.data;
      }
      operand.stage = Stage::Pre;
      operand.domain = expect.domain;
    } else {  // comparison: uint operands, bool result
      if (expect.data && expect.data->kind == DataType::Kind::Bool)
        operand.data =
            DataType{DataType::Kind::UInt, expect.data->has_modulus, nullptr};
      operand.stage = Stage::Pre;
      operand.domain = expect.domain;
    }

    QualType q1, q2;
    EffectSet d1, d2;
    if (inference_weakness(*n.lhs) > inference_weakness(*n.rhs)) {
      TypedResult rr = check(env, *n.rhs, operand);
      TypedResult lr = check(env, *n.lhs, Expect::of(rr.type));
      q1 = lr.type;
      q2 = rr.type;
      d1 = lr.effect;
      d2 = rr.effect;
    } else {
      TypedResult lr = check(env, *n.lhs, operand);
      TypedResult rr = check(env, *n.rhs, Expect::of(lr.type));
      q1 = lr.type;
      q2 = rr.type;
      d1 = lr.effect;
      d2 = rr.effect;
    }
    // Operand QualTypes must be identical; the expectation pass enforced it.
    DataType::Kind want = binop_is_logic(n.op) ? DataType::Kind::Bool
                                               : DataType::Kind::UInt;
    if (q1.data.kind != want)
      throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                      std::string("operator '") + binop_token(n.op) +
                          "' is not defined on " + to_string(q1.data));
    Stage s = q1.stage_or_pre();
    if (pre_only && s != Stage::Pre)
      throw TypeError(TypeErrorCode::StageMismatch, e.pos,
                      std::string("operator '") + binop_token(n.op) +
                          "' is available in stage $pre only");
    QualType result = q1;
    if (binop_is_compare(n.op)) {
      result.data = DataType{DataType::Kind::Bool, q1.data.has_modulus, nullptr};
    }
    EffectSet eff = EffectSet::of_stage(s).unite(d1).unite(d2);
    return {result, eff};
  }

  TypedResult check_node(TypeEnv& env, Expr&, AssertExpr& n, const Expect&) {
    Expect arg;
    arg.data = DataType{DataType::Kind::Bool, true, nullptr};
    arg.stage = Stage::Post;
    check(env, *n.arg, arg);
    return {unit_type(), EffectSet::up(Domain::Public)};
  }

  TypedResult check_node(TypeEnv& env, Expr&, AssertZeroExpr& n, const Expect&) {
    Expect arg;
    arg.data = DataType{DataType::Kind::UInt, true, nullptr};
    arg.stage = Stage::Post;
    check(env, *n.arg, arg);
    return {unit_type(), EffectSet::up(Domain::Public)};
  }

  TypedResult check_node(TypeEnv&, Expr& e, GetExpr& n, const Expect& expect) {
    QualType q;
    if (n.annotation) {
      q = *n.annotation;
    } else {
      if (!expect.data)
        throw TypeError(
            TypeErrorCode::MalformedGetAnnotation, e.pos,
            "cannot determine the type of this get expression; annotate the "
            "enclosing let binding");
      q.data = *expect.data;
      q.stage = expect.stage.value_or(Stage::Pre);
      q.domain = expect.domain.value_or(n.source);
    }
    if (!resolve_stages_pre(q) || !allpre(n.source, q))
      throw TypeError(TypeErrorCode::MalformedGetAnnotation, e.pos,
                      "the type of a get expression must be qualified $pre " +
                          std::string(domain_token(n.source)) +
                          " at every level; found " + to_string(q));
    n.annotation = q;
    return {q, EffectSet::empty()};
  }

  // Fills omitted stages with $pre; returns false if a stage other than
  // $pre occurs anywhere.
  bool resolve_stages_pre(QualType& q) {
    if (q.stage && *q.stage != Stage::Pre) return false;
    q.stage = Stage::Pre;
    if (q.data.kind == DataType::Kind::List) {
      QualType elem = *q.data.elem;
      if (!resolve_stages_pre(elem)) return false;
      q.data.elem = std::make_shared<const QualType>(std::move(elem));
    }
    return true;
  }

  TypedResult check_node(TypeEnv& env, Expr& e, IfExpr& n, const Expect& expect) {
    Expect guard;
    guard.stage = Stage::Pre;
    TypedResult g = check(env, *n.guard, guard);
    if (g.type.data.kind != DataType::Kind::Bool)
      throw TypeError(TypeErrorCode::TypeMismatch, n.guard->pos,
                      "if guard must be boolean, found " + to_string(g.type));
    Domain guard_domain = g.type.domain;
    TypedResult t, f;
    if (inference_weakness(*n.then_e) > inference_weakness(*n.else_e)) {
      f = check(env, *n.else_e, expect);
      t = check(env, *n.then_e, Expect::of(f.type));
    } else {
      t = check(env, *n.then_e, expect);
      f = check(env, *n.else_e, Expect::of(t.type));
    }
    check_branch_visibility(guard_domain, t.type, f.effect.unite(t.effect),
                            e.pos);
    return {t.type, g.effect.unite(t.effect).unite(f.effect)};
  }

  void check_branch_visibility(Domain guard_domain, const QualType& q,
                               EffectSet inner, SourcePos pos) {
    EffectSet up = EffectSet::up(guard_domain);
    if (!up.includes(EffectSet::up(q.domain)))
      throw TypeError(TypeErrorCode::NoReadUp, pos,
                      std::string("result domain ") + domain_token(q.domain) +
                          " is below the guard domain " +
                          domain_token(guard_domain));
    if (!up.includes(EffectSet::of_stage(q.stage_or_pre())))
      throw TypeError(TypeErrorCode::NoWriteDown, pos,
                      std::string("a $post result requires a ") +
                          domain_token(Domain::Public) + " guard, found " +
                          domain_token(guard_domain));
    if (!up.includes(inner))
      throw TypeError(TypeErrorCode::NoWriteDown, pos,
                      "body effects " + inner.to_string() +
                          " escape the guard domain " +
                          domain_token(guard_domain));
  }

  TypedResult check_node(TypeEnv& env, Expr& e, ForExpr& n, const Expect& expect) {
    Expect bound;
    bound.data = DataType{DataType::Kind::UInt, false, nullptr};
    bound.stage = Stage::Pre;
    // The loop's result domain is the bounds' domain.
    bound.domain = expect.domain;
    if (expect.data && expect.data->kind != DataType::Kind::List)
      throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                      "a for loop produces a list, but " +
                          to_string(*expect.data) + " is expected");
    TypedResult lo, hi;
    if (inference_weakness(*n.lo) > inference_weakness(*n.hi)) {
      hi = check(env, *n.hi, bound);
      lo = check(env, *n.lo, Expect::of(hi.type));
    } else {
      lo = check(env, *n.lo, bound);
      hi = check(env, *n.hi, Expect::of(lo.type));
    }
    Domain bounds_domain = lo.type.domain;

    Expect body_expect;
    if (expect.data && expect.data->kind == DataType::Kind::List)
      body_expect = Expect::of(*expect.data->elem);
    QualType loop_var = uint_type(false, Stage::Pre, bounds_domain);
    env.push_typing(n.var, loop_var);
    TypedResult body = check(env, *n.body, body_expect);
    env.pop(1);

    check_branch_visibility(bounds_domain, body.type, body.effect, e.pos);
    QualType q = list_type(body.type, Stage::Pre, bounds_domain);
    return {q, lo.effect.unite(hi.effect).unite(body.effect)};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, WireExpr& n, const Expect& expect) {
    Expect body;
    body.stage = Stage::Pre;
    if (expect.data) {
      if (expect.data->kind != DataType::Kind::UInt &&
          expect.data->kind != DataType::Kind::Bool)
        throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                        "wire produces uint[N] or bool[N], but " +
                            to_string(*expect.data) + " is expected");
      body.data = DataType{expect.data->kind, true, nullptr};
    }
    body.domain = expect.domain;
    TypedResult b = check(env, *n.body, body);
    if (!b.type.data.is_primitive() || b.type.data.kind == DataType::Kind::Unit ||
        !b.type.data.has_modulus)
      throw TypeError(TypeErrorCode::TypeMismatch, n.body->pos,
                      "wire requires a uint[N] or bool[N] value, found " +
                          to_string(b.type));
    QualType q = b.type;
    q.stage = Stage::Post;
    return {q, EffectSet::up(Domain::Public)};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, CastExpr& n, const Expect&) {
    Expect body;
    if (n.target.kind == CastTarget::Kind::Type) body.data = n.target.type.data;
    TypedResult b = check(env, *n.body, body);

    QualType target = b.type;
    switch (n.target.kind) {
      case CastTarget::Kind::Type:
        target = n.target.type;
        if (!target.stage) target.stage = b.type.stage;  // omitted: keep
        break;
      case CastTarget::Kind::StageOnly:
        target.stage = n.target.stage;
        break;
      case CastTarget::Kind::DomainOnly:
        target.domain = n.target.domain;
        break;
    }
    if (!(target.data == b.type.data))
      throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                      "a cast cannot change the data type (" +
                          to_string(b.type.data) + " to " +
                          to_string(target.data) + ")");
    if (!stage_le(b.type.stage_or_pre(), target.stage_or_pre()))
      throw TypeError(TypeErrorCode::StageMismatch, e.pos,
                      std::string("cannot cast stage ") +
                          stage_token(b.type.stage_or_pre()) + " to " +
                          stage_token(target.stage_or_pre()));
    if (!domain_le(b.type.domain, target.domain))
      throw TypeError(TypeErrorCode::DomainMismatch, e.pos,
                      std::string("cannot cast domain ") +
                          domain_token(b.type.domain) + " down to " +
                          domain_token(target.domain));
    if (!EffectSet::up(target.domain).includes(type_effect(target.data)))
      throw TypeError(TypeErrorCode::NoReadUp, e.pos,
                      "cast target domain " + std::string(domain_token(
                          target.domain)) +
                          " does not cover the element qualifiers of " +
                          to_string(target.data));
    return {target, b.effect};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, AssignExpr& n, const Expect&) {
    LValueTyping lt = check_lvalue(env, n.lv);
    const bool* is_mut = env.lookup_mut(n.lv.var);
    if (!is_mut || !*is_mut)
      throw TypeError(TypeErrorCode::NotMutable, e.pos,
                      "variable '" + n.lv.var + "' is not mutable");
    TypedResult r = check(env, *n.rhs, Expect::of(lt.element));
    EffectSet eff = EffectSet::of_stage(lt.element.stage_or_pre())
                        .unite(EffectSet::up(lt.element.domain))
                        .unite(r.effect)
                        .unite(lt.effect);
    return {unit_type(), eff};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, LoadExpr& n, const Expect&) {
    LValueTyping base = check_lvalue(env, n.lv);
    const QualType& list_q = base.element;
    if (list_q.data.kind != DataType::Kind::List)
      throw TypeError(TypeErrorCode::TypeMismatch, e.pos,
                      "indexing a value of non-list type " + to_string(list_q));
    Expect ie;
    ie.data = DataType{DataType::Kind::UInt, false, nullptr};
    ie.stage = list_q.stage_or_pre();
    ie.domain = list_q.domain;
    TypedResult ir = check(env, *n.index, ie);
    return {*list_q.data.elem, base.effect.unite(ir.effect)};
  }

  TypedResult check_node(TypeEnv& env, Expr& e, LetExpr& n, const Expect& expect) {
    Expect bexp;
    if (n.annotation) bexp = Expect::of(*n.annotation);
    TypedResult bound = check(env, *n.bound, bexp);
    env.push_typing(n.var, bound.type);
    env.push_mutability(n.var, n.is_mut);
    TypedResult rest = check(env, *n.rest, expect);
    env.pop(2);
    EffectSet eff = EffectSet::up(bound.type.domain)
                        .unite(bound.effect)
                        .unite(rest.effect);
    return {rest.type, eff};
  }

  TypedResult check_node(TypeEnv& env, Expr&, SeqExpr& n, const Expect& expect) {
    TypedResult first = check(env, *n.first, Expect::none());
    TypedResult rest = check(env, *n.rest, expect);
    return {rest.type, first.effect.unite(rest.effect)};
  }

  TypedResult check_node(TypeEnv&, Expr& e, CallExpr& n, const Expect&) {
    throw TypeError(TypeErrorCode::UnsupportedConstruct, e.pos,
                    "call to '" + n.name +
                        "': user-defined function calls are not part of the "
                        "monomorphic core");
  }

  const Nat& modulus_;
};

}  // namespace

TypedResult Typechecker::check_expr(TypeEnv& env, Expr& e,
                                    const QualType* expected) {
  Checker c(modulus_);
  Expect expect = expected ? Expect::of(*expected) : Expect::none();
  return c.check(env, e, expect);
}

LValueTyping Typechecker::check_lvalue(TypeEnv& env, LValue& lv) {
  Checker c(modulus_);
  return c.check_lvalue(env, lv);
}

void typecheck_program(Program& p, const Nat& modulus) {
  FunDef& main = p.main();
  TypeEnv env;
  Typechecker tc(modulus);
  if (main.return_type)
    tc.check_expr(env, *main.body, &*main.return_type);
  else
    tc.check_expr(env, *main.body, nullptr);
}

}  // namespace zksc
