#include "zksc/conformance/shrink.hpp"

#include <algorithm>

#include "zksc/typecheck.hpp"

namespace zksc::conf {

namespace {

std::vector<Expr*> children_of(Expr& e) {
  std::vector<Expr*> out;
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BinOp>) {
          out = {n.lhs.get(), n.rhs.get()};
        } else if constexpr (std::is_same_v<T, AssertExpr>) {
          out = {n.arg.get()};
        } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
          out = {n.arg.get()};
        } else if constexpr (std::is_same_v<T, IfExpr>) {
          out = {n.guard.get(), n.then_e.get(), n.else_e.get()};
        } else if constexpr (std::is_same_v<T, ForExpr>) {
          out = {n.lo.get(), n.hi.get(), n.body.get()};
        } else if constexpr (std::is_same_v<T, WireExpr>) {
          out = {n.body.get()};
        } else if constexpr (std::is_same_v<T, CastExpr>) {
          out = {n.body.get()};
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          for (auto& i : n.lv.indices) out.push_back(i.get());
          out.push_back(n.rhs.get());
        } else if constexpr (std::is_same_v<T, LoadExpr>) {
          for (auto& i : n.lv.indices) out.push_back(i.get());
          out.push_back(n.index.get());
        } else if constexpr (std::is_same_v<T, LetExpr>) {
          out = {n.bound.get(), n.rest.get()};
        } else if constexpr (std::is_same_v<T, SeqExpr>) {
          out = {n.first.get(), n.rest.get()};
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          for (auto& a : n.args) out.push_back(a.get());
        }
      },
      e.node);
  return out;
}

ExprPtr* child_slot(Expr& e, int idx) {
  ExprPtr* slot = nullptr;
  int want = idx;
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto pick = [&](std::vector<ExprPtr*> slots) {
          if (want >= 0 && want < static_cast<int>(slots.size()))
            slot = slots[static_cast<std::size_t>(want)];
        };
        if constexpr (std::is_same_v<T, BinOp>) {
          pick({&n.lhs, &n.rhs});
        } else if constexpr (std::is_same_v<T, AssertExpr>) {
          pick({&n.arg});
        } else if constexpr (std::is_same_v<T, AssertZeroExpr>) {
          pick({&n.arg});
        } else if constexpr (std::is_same_v<T, IfExpr>) {
          pick({&n.guard, &n.then_e, &n.else_e});
        } else if constexpr (std::is_same_v<T, ForExpr>) {
          pick({&n.lo, &n.hi, &n.body});
        } else if constexpr (std::is_same_v<T, WireExpr>) {
          pick({&n.body});
        } else if constexpr (std::is_same_v<T, CastExpr>) {
          pick({&n.body});
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          std::vector<ExprPtr*> slots;
          for (auto& i : n.lv.indices) slots.push_back(&i);
          slots.push_back(&n.rhs);
          pick(std::move(slots));
        } else if constexpr (std::is_same_v<T, LoadExpr>) {
          std::vector<ExprPtr*> slots;
          for (auto& i : n.lv.indices) slots.push_back(&i);
          slots.push_back(&n.index);
          pick(std::move(slots));
        } else if constexpr (std::is_same_v<T, LetExpr>) {
          pick({&n.bound, &n.rest});
        } else if constexpr (std::is_same_v<T, SeqExpr>) {
          pick({&n.first, &n.rest});
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          std::vector<ExprPtr*> slots;
          for (auto& a : n.args) slots.push_back(&a);
          pick(std::move(slots));
        }
      },
      e.node);
  return slot;
}

struct Action {
  std::vector<int> path;
  enum class Kind { ReplaceWithChild, ToLiteral, HalveNat } kind;
  int arg = 0;
};

void enumerate(Expr& e, std::vector<int>& path, std::vector<Action>& out) {
  std::vector<Expr*> kids = children_of(e);
  for (int i = 0; i < static_cast<int>(kids.size()); ++i)
    out.push_back({path, Action::Kind::ReplaceWithChild, i});
  bool is_literal = e.is<NatLit>() || e.is<BoolLit>() || e.is<UnitLit>();
  if (!is_literal && e.type && e.type->data.is_primitive())
    out.push_back({path, Action::Kind::ToLiteral, 0});
  if (const auto* n = e.as<NatLit>(); n && n->value > 0)
    out.push_back({path, Action::Kind::HalveNat, 0});
  for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
    path.push_back(i);
    enumerate(*kids[i], path, out);
    path.pop_back();
  }
}

Expr* navigate(Expr& root, const std::vector<int>& path, std::size_t upto) {
  Expr* cur = &root;
  for (std::size_t i = 0; i < upto; ++i) {
    std::vector<Expr*> kids = children_of(*cur);
    int idx = path[i];
    if (idx < 0 || idx >= static_cast<int>(kids.size())) return nullptr;
    cur = kids[static_cast<std::size_t>(idx)];
  }
  return cur;
}

bool apply_action(Program& p, const Action& a) {
  Expr& root = *p.main().body;
  if (a.kind == Action::Kind::ReplaceWithChild) {
    if (a.path.empty()) {
      Expr* target = &root;
      std::vector<Expr*> kids = children_of(*target);
      if (a.arg >= static_cast<int>(kids.size())) return false;
      ExprPtr* slot = child_slot(*target, a.arg);
      if (!slot) return false;
      ExprPtr taken = std::move(*slot);
      p.main().body = std::move(taken);
      return true;
    }
    Expr* parent = navigate(root, a.path, a.path.size() - 1);
    if (!parent) return false;
    ExprPtr* parent_slot = child_slot(*parent, a.path.back());
    if (!parent_slot || !*parent_slot) return false;
    ExprPtr* slot = child_slot(**parent_slot, a.arg);
    if (!slot) return false;
    *parent_slot = std::move(*slot);
    return true;
  }
  Expr* target = navigate(root, a.path, a.path.size());
  if (!target) return false;
  if (a.kind == Action::Kind::ToLiteral) {
    if (!target->type || !target->type->data.is_primitive()) return false;
    ExprNode lit;
    switch (target->type->data.kind) {
      case DataType::Kind::UInt: lit = NatLit{Nat(0)}; break;
      case DataType::Kind::Bool: lit = BoolLit{true}; break;
      case DataType::Kind::Unit: lit = UnitLit{}; break;
      default: return false;
    }
    target->node = std::move(lit);
    return true;
  }
  if (a.kind == Action::Kind::HalveNat) {
    auto* n = target->as<NatLit>();
    if (!n || n->value == 0) return false;
    n->value = n->value / 2;
    return true;
  }
  return false;
}

}  // namespace

Program shrink_program(const Program& failing, const Nat& modulus,
                       const StillFails& still_fails, int max_steps) {
  Program current = clone_program(failing);
  int steps = 0;
  for (;;) {
    std::vector<Action> actions;
    std::vector<int> path;
    enumerate(*current.main().body, path, actions);
    // Bigger cuts first: outer nodes before inner ones.
    std::stable_sort(actions.begin(), actions.end(),
                     [](const Action& a, const Action& b) {
                       return a.path.size() < b.path.size();
                     });
    bool improved = false;
    for (const Action& a : actions) {
      if (steps >= max_steps) return current;
      Program candidate = clone_program(current);
      if (!apply_action(candidate, a)) continue;
      ++steps;
      try {
        typecheck_program(candidate, modulus);
      } catch (const TypeError&) {
        continue;
      }
      if (still_fails(candidate)) {
        current = std::move(candidate);
        improved = true;
        break;
      }
    }
    if (!improved) return current;
  }
}

}  // namespace zksc::conf
