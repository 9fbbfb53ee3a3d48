#include "zksc/conformance/gen.hpp"

#include "zksc/io.hpp"

#include <algorithm>

namespace zksc::conf {

namespace {

const SourcePos kNoPos{};
const EffectSet kFull = EffectSet::up(Domain::Public);

Domain random_domain(std::mt19937_64& rng, Domain at_least = Domain::Public) {
  int lo = static_cast<int>(at_least);
  return static_cast<Domain>(lo + static_cast<int>(rng() % (3 - lo)));
}

Domain random_domain_at_most(std::mt19937_64& rng, Domain at_most) {
  return static_cast<Domain>(rng() % (static_cast<int>(at_most) + 1));
}

// True when every level of q is $pre with the same domain as q (and no
// unit occurs, so an input value can represent it).
bool get_compatible(const QualType& q) {
  if (q.data.kind == DataType::Kind::Unit) return false;
  if (!allpre(q.domain, q)) return false;
  const QualType* cur = &q;
  while (cur->data.kind == DataType::Kind::List) {
    cur = cur->data.elem.get();
    if (cur->data.kind == DataType::Kind::Unit) return false;
  }
  return true;
}

class Generator {
 public:
  Generator(const GenConfig& cfg, std::mt19937_64& rng) : cfg_(cfg), rng_(rng) {}

  struct Binding {
    std::string name;
    QualType type;
    bool is_mut;
  };

  std::vector<Binding> scope_;

  // --- random helpers ---
  bool coin(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : rng_() % n; }

  Nat random_nat(bool has_modulus) {
    if (has_modulus) {
      if (coin(0.3)) return Nat(below(6));
      return Nat(rng_()) % cfg_.modulus;
    }
    return Nat(below(16));
  }

  std::string fresh_var() { return "v" + std::to_string(fresh_++); }
  std::string fresh_key() { return "k" + std::to_string(keys_++); }

  // --- type selection ---
  QualType pick_type(int depth, bool allow_post, Domain min_domain) {
    for (int attempt = 0; attempt < 24; ++attempt) {
      int kind = static_cast<int>(below(depth > 0 ? 6 : 5));
      switch (kind) {
        case 0:
        case 1: {  // uint[N] (double weight)
          bool post = allow_post && coin(0.4);
          return uint_type(true, post ? Stage::Post : Stage::Pre,
                           random_domain(rng_, min_domain));
        }
        case 2:
          return uint_type(false, Stage::Pre, random_domain(rng_, min_domain));
        case 3: {
          bool post = allow_post && coin(0.3);
          return bool_type(true, post ? Stage::Post : Stage::Pre,
                           random_domain(rng_, min_domain));
        }
        case 4:
          if (min_domain != Domain::Public) continue;  // unit is public-only
          return coin(0.5) ? unit_type()
                           : bool_type(false, Stage::Pre,
                                       random_domain(rng_, min_domain));
        default: {  // list
          QualType elem = pick_type(depth - 1, allow_post, Domain::Public);
          Domain d;
          if (elem.stage_or_pre() == Stage::Post) {
            if (min_domain != Domain::Public) continue;
            d = Domain::Public;
          } else {
            if (!domain_le(min_domain, elem.domain)) continue;
            d = static_cast<Domain>(static_cast<int>(min_domain) +
                                    below(static_cast<int>(elem.domain) -
                                          static_cast<int>(min_domain) + 1));
          }
          return list_type(std::move(elem), Stage::Pre, d);
        }
      }
    }
    return uint_type(true, Stage::Pre, min_domain);
  }

  // A type whose expressions can be generated so that an unannotated
  // context still derives it exactly.
  QualType pick_stable_type(int depth, EffectSet budget) {
    if (budget == kFull) return pick_type(depth, true, Domain::Public);
    if (!scope_.empty() && coin(0.4))
      return scope_[below(scope_.size())].type;
    Domain base = budget.least().value_or(Domain::Public);
    return pick_type(depth, false, base);
  }

  // --- expression generation ---
  // Pinned positions: the typechecker pushes the full expected type here.
  ExprPtr gen_pinned(const QualType& q, EffectSet budget, int depth) {
    struct Candidate {
      double weight;
      int tag;
    };
    std::vector<Candidate> cands;
    Stage s = q.stage_or_pre();
    bool primitive = q.data.is_primitive();
    bool is_unit = q.data.kind == DataType::Kind::Unit;
    bool unit_ppp = is_unit && q.stage_or_pre() == Stage::Pre &&
                    q.domain == Domain::Public;
    bool lit_ok = primitive && (is_unit ? unit_ppp : true) &&
                  budget.includes(EffectSet::of_stage(s));

    if (lit_ok) cands.push_back({cfg_.w_lit, 0});
    if (count_vars(q) > 0) cands.push_back({cfg_.w_var, 1});
    if (s == Stage::Pre && get_compatible(q)) cands.push_back({cfg_.w_get, 2});
    if (depth > 0) {
      if (primitive && !is_unit && binop_feasible(q, budget))
        cands.push_back({cfg_.w_binop, 3});
      if (unit_ppp && budget == kFull) cands.push_back({cfg_.w_assert, 4});
      if (s == Stage::Post && q.data.has_modulus && budget == kFull)
        cands.push_back({cfg_.w_wire, 5});
      cands.push_back({cfg_.w_if, 6});
      if (q.data.kind == DataType::Kind::List) cands.push_back({cfg_.w_for, 7});
      if (cast_feasible(q, budget)) cands.push_back({cfg_.w_cast, 8});
      cands.push_back({cfg_.w_let, 9});
      cands.push_back({cfg_.w_seq, 10});
      if (unit_ppp && !assign_candidates(budget).empty())
        cands.push_back({cfg_.w_assign, 11});
      if (!load_candidates(q).empty()) cands.push_back({cfg_.w_load, 12});
    }

    // Weighted pick with fallback to a leaf.
    while (!cands.empty()) {
      double total = 0;
      for (const auto& c : cands) total += c.weight;
      double x = std::uniform_real_distribution<double>(0.0, total)(rng_);
      std::size_t chosen = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        x -= cands[i].weight;
        if (x <= 0) {
          chosen = i;
          break;
        }
      }
      int tag = cands[chosen].tag;
      cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(chosen));
      ExprPtr e = build(tag, q, budget, depth);
      if (e) return e;
    }
    return leaf(q, budget);
  }

  // Stable positions: no expected type reaches this expression, so it must
  // derive exactly q on its own. Variables, annotated let wrappers, unit,
  // and public literals qualify.
  ExprPtr gen_stable(const QualType& q, EffectSet budget, int depth) {
    bool var_ok = count_vars(q) > 0;
    if (var_ok && coin(0.45)) return make_var(q);
    if (budget.includes(EffectSet::up(q.domain)) && depth > 0) {
      std::string name = fresh_var();
      ExprPtr bound = gen_pinned(q, budget, depth - 1);
      scope_.push_back({name, q, false});
      ExprPtr rest = make_expr(VarRef{name}, kNoPos);
      scope_.pop_back();
      return make_expr(
          LetExpr{false, name, q, std::move(bound), std::move(rest)}, kNoPos);
    }
    if (var_ok) return make_var(q);
    if (q.data.kind == DataType::Kind::Unit) return make_expr(UnitLit{}, kNoPos);
    if (q.data.is_primitive() && q.domain == Domain::Public &&
        q.stage_or_pre() == Stage::Pre)
      return literal(q);
    // Callers guarantee one of the above is possible or the wrapper fits
    // the budget.
    std::string name = fresh_var();
    ExprPtr bound = leaf(q, budget);
    return make_expr(
        LetExpr{false, name, q, std::move(bound), make_expr(VarRef{name}, kNoPos)},
        kNoPos);
  }

  // Whether gen_stable can produce this type under the budget.
  bool stable_feasible(const QualType& q, EffectSet budget) {
    if (count_vars(q) > 0) return true;
    if (budget.includes(EffectSet::up(q.domain))) return true;
    if (q.data.kind == DataType::Kind::Unit) return true;
    return q.data.is_primitive() && q.domain == Domain::Public &&
           q.stage_or_pre() == Stage::Pre;
  }

 private:
  // --- feasibility ---
  std::size_t count_vars(const QualType& q) {
    std::size_t n = 0;
    for (const Binding& b : scope_)
      if (b.type == q) ++n;
    return n;
  }

  ExprPtr make_var(const QualType& q) {
    std::vector<const Binding*> matches;
    for (const Binding& b : scope_)
      if (b.type == q) matches.push_back(&b);
    return make_expr(VarRef{matches[below(matches.size())]->name}, kNoPos);
  }

  bool binop_feasible(const QualType& q, EffectSet budget) {
    Stage s = q.stage_or_pre();
    if (!budget.includes(EffectSet::of_stage(s))) return false;
    if (q.data.kind == DataType::Kind::UInt) return true;
    // bool results come from logic or comparisons, $pre only
    return q.data.kind == DataType::Kind::Bool && s == Stage::Pre;
  }

  bool cast_feasible(const QualType& q, EffectSet budget) {
    if (!EffectSet::up(q.domain).includes(type_effect(q.data))) return false;
    if (q.stage_or_pre() == Stage::Post)
      return budget == kFull && q.data.is_primitive() && q.data.has_modulus;
    return true;
  }

  struct AssignTarget {
    std::size_t binding;
    int levels;
    QualType element;
  };

  std::vector<AssignTarget> assign_candidates(EffectSet budget) {
    std::vector<AssignTarget> out;
    for (std::size_t i = 0; i < scope_.size(); ++i) {
      if (!scope_[i].is_mut) continue;
      const QualType* cur = &scope_[i].type;
      int level = 0;
      for (;;) {
        EffectSet eff = EffectSet::of_stage(cur->stage_or_pre())
                            .unite(EffectSet::up(cur->domain));
        if (budget.includes(eff)) out.push_back({i, level, *cur});
        if (cur->data.kind != DataType::Kind::List) break;
        cur = cur->data.elem.get();
        ++level;
      }
    }
    return out;
  }

  struct LoadTarget {
    std::size_t binding;
    int levels;  // >= 1
  };

  std::vector<LoadTarget> load_candidates(const QualType& q) {
    std::vector<LoadTarget> out;
    for (std::size_t i = 0; i < scope_.size(); ++i) {
      const QualType* cur = &scope_[i].type;
      int level = 0;
      while (cur->data.kind == DataType::Kind::List) {
        cur = cur->data.elem.get();
        ++level;
        if (*cur == q) out.push_back({i, level});
      }
    }
    return out;
  }

  // --- builders; return nullptr when the dice landed on an infeasible shape ---
  ExprPtr build(int tag, const QualType& q, EffectSet budget, int depth) {
    switch (tag) {
      case 0: return literal(q);
      case 1: return make_var(q);
      case 2: return wrapped_get(q);
      case 3: return binop(q, budget, depth);
      case 4: return assertion(budget, depth);
      case 5: return wire(q, budget, depth);
      case 6: return if_expr(q, budget, depth);
      case 7: return for_expr(q, budget, depth);
      case 8: return cast(q, budget, depth);
      case 9: return let_expr(q, budget, depth);
      case 10: return seq(q, budget, depth);
      case 11: return assign(budget, depth);
      case 12: return load(q, budget, depth);
    }
    return nullptr;
  }

  ExprPtr literal(const QualType& q) {
    switch (q.data.kind) {
      case DataType::Kind::UInt:
        return make_expr(NatLit{random_nat(q.data.has_modulus)}, kNoPos);
      case DataType::Kind::Bool:
        return make_expr(BoolLit{coin(0.7)}, kNoPos);
      case DataType::Kind::Unit:
        return make_expr(UnitLit{}, kNoPos);
      default:
        return nullptr;
    }
  }

  ExprPtr leaf(const QualType& q, EffectSet budget) {
    if (count_vars(q) > 0 && coin(0.5)) return make_var(q);
    if (q.data.kind == DataType::Kind::List) {
      // An empty or short loop of leaves.
      std::string var = "i" + std::to_string(fresh_++);
      int len = static_cast<int>(below(cfg_.max_list_len + 1));
      Domain d = q.domain;
      scope_.push_back({var, uint_type(false, Stage::Pre, d), false});
      ExprPtr body = leaf(*q.data.elem, budget.intersect(EffectSet::up(d)));
      scope_.pop_back();
      return make_expr(ForExpr{var, make_expr(NatLit{Nat(0)}, kNoPos),
                               make_expr(NatLit{Nat(len)}, kNoPos),
                               std::move(body)},
                       kNoPos);
    }
    if (ExprPtr e = literal(q)) return e;
    if (count_vars(q) > 0) return make_var(q);
    return make_expr(UnitLit{}, kNoPos);
  }

  ExprPtr wrapped_get(const QualType& q) {
    std::string name = fresh_var();
    GetExpr g;
    g.source = q.domain;
    g.key = fresh_key();
    return make_expr(LetExpr{false, name, q, make_expr(std::move(g), kNoPos),
                             make_expr(VarRef{name}, kNoPos)},
                     kNoPos);
  }

  ExprPtr binop(const QualType& q, EffectSet budget, int depth) {
    Stage s = q.stage_or_pre();
    BinOpKind op;
    QualType operand = q;
    if (q.data.kind == DataType::Kind::UInt) {
      if (s == Stage::Post) {
        constexpr BinOpKind ops[] = {BinOpKind::Add, BinOpKind::Sub,
                                     BinOpKind::Mul};
        op = ops[below(3)];
      } else {
        constexpr BinOpKind ops[] = {BinOpKind::Add, BinOpKind::Sub,
                                     BinOpKind::Mul, BinOpKind::Div,
                                     BinOpKind::Mod};
        op = ops[below(5)];
      }
    } else {
      if (coin(0.5)) {
        op = coin(0.5) ? BinOpKind::And : BinOpKind::Or;
      } else {
        constexpr BinOpKind ops[] = {BinOpKind::Eq, BinOpKind::Lt,
                                     BinOpKind::Le};
        op = ops[below(3)];
        operand = uint_type(q.data.has_modulus, Stage::Pre, q.domain);
      }
    }
    ExprPtr lhs = gen_pinned(operand, budget, depth - 1);
    ExprPtr rhs;
    if ((op == BinOpKind::Div || op == BinOpKind::Mod) && coin(0.7)) {
      // Mostly non-zero literal divisors.
      Nat max_lit = operand.data.has_modulus
                        ? (cfg_.modulus > 10 ? Nat(9) : Nat(cfg_.modulus - 1))
                        : Nat(9);
      Nat v = Nat(1) + Nat(rng_()) % max_lit;
      rhs = make_expr(NatLit{v}, kNoPos);
    } else {
      rhs = gen_pinned(operand, budget, depth - 1);
    }
    return make_expr(BinOp{op, std::move(lhs), std::move(rhs)}, kNoPos);
  }

  ExprPtr assertion(EffectSet, int depth) {
    Domain d = random_domain(rng_);
    if (coin(0.5)) {
      ExprPtr arg = gen_stable(bool_type(true, Stage::Post, d), kFull, depth - 1);
      return make_expr(AssertExpr{std::move(arg)}, kNoPos);
    }
    ExprPtr arg = gen_stable(uint_type(true, Stage::Post, d), kFull, depth - 1);
    return make_expr(AssertZeroExpr{std::move(arg)}, kNoPos);
  }

  ExprPtr wire(const QualType& q, EffectSet budget, int depth) {
    QualType body = q;
    body.stage = Stage::Pre;
    return make_expr(WireExpr{gen_pinned(body, budget, depth - 1)}, kNoPos);
  }

  ExprPtr if_expr(const QualType& q, EffectSet budget, int depth) {
    Stage s = q.stage_or_pre();
    std::vector<QualType> guard_types;
    for (Domain d : {Domain::Public, Domain::Verifier, Domain::Prover}) {
      if (!domain_le(d, q.domain)) continue;
      if (s == Stage::Post && d != Domain::Public) continue;
      for (bool has_mod : {true, false}) {
        QualType gq = bool_type(has_mod, Stage::Pre, d);
        if (stable_feasible(gq, budget)) guard_types.push_back(gq);
      }
    }
    if (guard_types.empty()) return nullptr;
    QualType guard_q = guard_types[below(guard_types.size())];
    Domain gd = guard_q.domain;
    ExprPtr guard = gen_stable(guard_q, budget, depth - 1);
    EffectSet inner = budget.intersect(EffectSet::up(gd));
    ExprPtr then_e = gen_pinned(q, inner, depth - 1);
    ExprPtr else_e = gen_pinned(q, inner, depth - 1);
    return make_expr(
        IfExpr{std::move(guard), std::move(then_e), std::move(else_e)}, kNoPos);
  }

  ExprPtr for_expr(const QualType& q, EffectSet budget, int depth) {
    Domain d = q.domain;
    QualType bound_q = uint_type(false, Stage::Pre, d);
    ExprPtr lo, hi;
    if (coin(0.8) || !stable_feasible(bound_q, budget)) {
      int start = coin(0.8) ? 0 : 1;
      int len = static_cast<int>(below(cfg_.max_list_len + 1));
      lo = make_expr(NatLit{Nat(start)}, kNoPos);
      hi = make_expr(NatLit{Nat(start + len)}, kNoPos);
    } else {
      lo = gen_stable(bound_q, budget, depth - 1);
      hi = gen_stable(bound_q, budget, depth - 1);
    }
    std::string var = "i" + std::to_string(fresh_++);
    EffectSet inner = budget.intersect(EffectSet::up(d));
    scope_.push_back({var, uint_type(false, Stage::Pre, d), false});
    ExprPtr body = gen_pinned(*q.data.elem, inner, depth - 1);
    scope_.pop_back();
    return make_expr(
        ForExpr{var, std::move(lo), std::move(hi), std::move(body)}, kNoPos);
  }

  // The typechecker pushes only the data type into a cast body, so the
  // body must derive its stage and domain on its own.
  ExprPtr cast(const QualType& q, EffectSet budget, int depth) {
    CastTarget target;
    target.kind = CastTarget::Kind::Type;
    target.type = q;
    Domain d0 = random_domain_at_most(rng_, q.domain);
    if (q.stage_or_pre() == Stage::Post) {
      // Body must itself be $post: a matching variable or a wire.
      QualType body_q = q;
      body_q.domain = d0;
      if (count_vars(body_q) > 0 && coin(0.5))
        return make_expr(CastExpr{make_var(body_q), target}, kNoPos);
      QualType pre_q = body_q;
      pre_q.stage = Stage::Pre;
      ExprPtr body = make_expr(
          WireExpr{gen_stable(pre_q, budget, std::max(0, depth - 2))}, kNoPos);
      return make_expr(CastExpr{std::move(body), target}, kNoPos);
    }
    QualType body_q = q;
    body_q.domain = d0;
    if (q.data.is_primitive() && q.data.has_modulus && budget == kFull &&
        coin(0.3)) {
      // A $post-to-$pre cast.
      QualType post_q = body_q;
      post_q.stage = Stage::Post;
      ExprPtr body;
      if (count_vars(post_q) > 0 && coin(0.5)) {
        body = make_var(post_q);
      } else {
        QualType pre_q = body_q;
        pre_q.stage = Stage::Pre;
        body = make_expr(WireExpr{gen_stable(pre_q, budget, std::max(0, depth - 2))}, kNoPos);
      }
      return make_expr(CastExpr{std::move(body), target}, kNoPos);
    }
    if (!stable_feasible(body_q, budget)) return nullptr;
    return make_expr(
        CastExpr{gen_stable(body_q, budget, depth - 1), target}, kNoPos);
  }

  ExprPtr let_expr(const QualType& q, EffectSet budget, int depth) {
    Domain min_domain = budget.least().value_or(Domain::Public);
    QualType bound_q = pick_type(depth - 1, budget == kFull, min_domain);
    std::string name = fresh_var();
    ExprPtr bound = gen_pinned(bound_q, budget, depth - 1);
    scope_.push_back({name, bound_q, coin(0.5)});
    ExprPtr rest = gen_pinned(q, budget, depth - 1);
    bool is_mut = scope_.back().is_mut;
    scope_.pop_back();
    return make_expr(
        LetExpr{is_mut, name, bound_q, std::move(bound), std::move(rest)},
        kNoPos);
  }

  ExprPtr seq(const QualType& q, EffectSet budget, int depth) {
    QualType first_q = pick_stable_type(depth - 1, budget);
    ExprPtr first = gen_stable(first_q, budget, depth - 1);
    ExprPtr rest = gen_pinned(q, budget, depth - 1);
    return make_expr(SeqExpr{std::move(first), std::move(rest)}, kNoPos);
  }

  ExprPtr assign(EffectSet budget, int depth) {
    auto cands = assign_candidates(budget);
    if (cands.empty()) return nullptr;
    const AssignTarget& t = cands[below(cands.size())];
    LValue lv;
    lv.var = scope_[t.binding].name;
    lv.pos = kNoPos;
    const QualType* cur = &scope_[t.binding].type;
    for (int k = 0; k < t.levels; ++k) {
      lv.indices.push_back(index_expr(cur->domain, budget, depth));
      cur = cur->data.elem.get();
    }
    ExprPtr rhs = gen_pinned(t.element, budget, depth - 1);
    return make_expr(AssignExpr{std::move(lv), std::move(rhs)}, kNoPos);
  }

  ExprPtr load(const QualType& q, EffectSet budget, int depth) {
    auto cands = load_candidates(q);
    if (cands.empty()) return nullptr;
    const LoadTarget& t = cands[below(cands.size())];
    LValue lv;
    lv.var = scope_[t.binding].name;
    lv.pos = kNoPos;
    const QualType* cur = &scope_[t.binding].type;
    std::vector<ExprPtr> indices;
    for (int k = 0; k < t.levels; ++k) {
      indices.push_back(index_expr(cur->domain, budget, depth));
      cur = cur->data.elem.get();
    }
    ExprPtr last = std::move(indices.back());
    indices.pop_back();
    lv.indices = std::move(indices);
    return make_expr(LoadExpr{std::move(lv), std::move(last)}, kNoPos);
  }

  ExprPtr index_expr(Domain d, EffectSet budget, int depth) {
    if (coin(0.75)) return make_expr(NatLit{Nat(below(2))}, kNoPos);
    return gen_pinned(uint_type(false, Stage::Pre, d), budget,
                      std::max(0, depth - 2));
  }

  const GenConfig& cfg_;
  std::mt19937_64& rng_;
  int fresh_ = 0;
  int keys_ = 0;
};

}  // namespace

ExprPtr gen_welltyped(const GenConfig& cfg, std::mt19937_64& rng, TypeEnv& env,
                      const QualType& target) {
  Generator g(cfg, rng);
  // Import the visible (non-shadowed) typings of the supplied environment,
  // nearest binding first.
  for (const auto& [name, q] : env.typings()) {
    bool seen = false;
    for (const auto& b : g.scope_) seen = seen || b.name == name;
    if (seen) continue;
    const bool* m = env.lookup_mut(name);
    g.scope_.push_back({name, q, m && *m});
  }
  return g.gen_stable(target, EffectSet::up(Domain::Public), cfg.max_depth);
}

Program gen_program(const GenConfig& cfg, std::uint64_t trial_seed) {
  std::seed_seq seq{cfg.seed, trial_seed};
  std::mt19937_64 rng(seq);
  Generator g(cfg, rng);

  struct Prefix {
    std::string name;
    QualType type;
    bool is_mut;
    ExprPtr bound;
  };
  std::vector<Prefix> prefix;
  std::size_t count = cfg.prefix_lets_max > 0
                          ? rng() % static_cast<std::size_t>(cfg.prefix_lets_max + 1)
                          : 0;
  for (std::size_t i = 0; i < count; ++i) {
    QualType q = g.pick_type(2, true, Domain::Public);
    ExprPtr bound =
        g.gen_pinned(q, EffectSet::up(Domain::Public),
                     std::min(3, cfg.max_depth));
    bool is_mut = g.coin(0.5);
    std::string name = "p" + std::to_string(i);
    g.scope_.push_back({name, q, is_mut});
    prefix.push_back({name, q, is_mut, std::move(bound)});
  }

  QualType subject_q = g.coin(0.5) ? unit_type()
                                   : g.pick_type(3, true, Domain::Public);
  ExprPtr body =
      g.gen_stable(subject_q, EffectSet::up(Domain::Public), cfg.max_depth);

  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    body = make_expr(LetExpr{it->is_mut, it->name, it->type,
                             std::move(it->bound), std::move(body)},
                     kNoPos);

  Program p;
  FunDef main;
  main.name = "main";
  main.body = std::move(body);
  main.pos = kNoPos;
  p.functions.push_back(std::move(main));
  return p;
}

CoreValue random_core_value(std::mt19937_64& rng, const QualType& q,
                            const Nat& modulus, int max_list_len) {
  switch (q.data.kind) {
    case DataType::Kind::UInt: {
      if (!q.data.has_modulus) return CoreValue{Nat(rng() % 16)};
      if (rng() % 10 < 3) return CoreValue{Nat(rng() % 6) % modulus};
      return CoreValue{Nat(rng()) % modulus};
    }
    case DataType::Kind::Bool:
      return CoreValue{(rng() & 1) == 0};
    case DataType::Kind::List: {
      std::size_t len = rng() % static_cast<std::size_t>(max_list_len + 1);
      CoreList items;
      for (std::size_t i = 0; i < len; ++i)
        items.push_back(random_core_value(rng, *q.data.elem, modulus, max_list_len));
      return CoreValue{std::move(items)};
    }
    case DataType::Kind::Unit:
      break;
  }
  throw std::logic_error("random_core_value: unit-typed input requested");
}

Inputs gen_inputs(const GenConfig& cfg, std::mt19937_64& rng, const Program& p) {
  Inputs inputs;
  for (const GetSite& site : collect_get_sites(p)) {
    auto& dict = inputs.at(site.source);
    if (dict.count(site.key)) continue;
    dict.emplace(site.key, random_core_value(rng, site.annotation, cfg.modulus,
                                             cfg.max_list_len));
  }
  return inputs;
}

}  // namespace zksc::conf
