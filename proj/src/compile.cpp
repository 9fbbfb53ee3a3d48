#include "zksc/compile.hpp"

#include <stdexcept>

namespace zksc {

CompositeValue comp_unknown() { return CompositeValue{}; }

CompositeValue comp_nat(Nat n, std::optional<NodeId> node) {
  CompositeValue cv;
  cv.value = std::make_shared<const CompValue>(CompValue{std::move(n)});
  cv.node = node;
  return cv;
}

CompositeValue comp_bool(bool b, std::optional<NodeId> node) {
  CompositeValue cv;
  cv.value = std::make_shared<const CompValue>(CompValue{b});
  cv.node = node;
  return cv;
}

CompositeValue comp_unit() {
  CompositeValue cv;
  cv.value = std::make_shared<const CompValue>(CompValue{UnitValue{}});
  return cv;
}

CompositeValue comp_list(CompList elems) {
  CompositeValue cv;
  cv.value = std::make_shared<const CompValue>(CompValue{std::move(elems)});
  return cv;
}

CompositeValue comp_node_only(NodeId node) {
  CompositeValue cv;
  cv.node = node;
  return cv;
}

CompositeValue allpuretop(const CoreValue& v) {
  return std::visit(
      [](const auto& x) -> CompositeValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CoreList>) {
          CompList out;
          out.reserve(x.size());
          for (const auto& e : x) out.push_back(allpuretop(e));
          return comp_list(std::move(out));
        } else {
          CompositeValue cv;
          cv.value = std::make_shared<const CompValue>(CompValue{x});
          return cv;
        }
      },
      v.v);
}

CompositeValue upd_c(const CompositeValue& a,
                     std::span<const CompositeValue> indices,
                     const CompositeValue& v) {
  if (indices.empty()) return v;
  if (!a.value_known() || !indices.front().value_known()) return comp_unknown();
  const CompValue& av = *a.value;
  if (!av.is_list()) throw std::logic_error("upd_c: updating a non-list value");
  const Nat& i = indices.front().value->nat();
  const CompList& list = av.list();
  if (i >= list.size())
    throw EvalFailure{"index " + nat_to_string(i) +
                          " out of bounds for list of length " +
                          std::to_string(list.size()),
                      SourcePos{}};
  std::size_t idx = static_cast<std::size_t>(i);
  CompList out = list;
  out[idx] = upd_c(list[idx], indices.subspan(1), v);
  // The rebuilt list carries no circuit node.
  return comp_list(std::move(out));
}

MaybeValue bullet(const CompositeValue& cv, const Circuit& circuit,
                  const InputAssignment& pi) {
  if (cv.value_known()) {
    const CompValue& v = *cv.value;
    return std::visit(
        [&](const auto& x) -> MaybeValue {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Nat>) {
            return known_nat(x);
          } else if constexpr (std::is_same_v<T, bool>) {
            return known_nat(Nat(x ? 0 : 1));  // |tt| = 0, |ff| = 1
          } else if constexpr (std::is_same_v<T, UnitValue>) {
            return known_unit();
          } else {
            ValueList out;
            out.reserve(x.size());
            for (const auto& e : x) out.push_back(bullet(e, circuit, pi));
            return known_list(std::move(out));
          }
        },
        v.v);
  }
  if (cv.node_known()) return known_nat(eval_with_input(*cv.node, circuit, pi));
  return MaybeValue::unknown();
}

namespace {

// |b|: the integer encoding of a boolean at the circuit boundary.
Nat bool_repr(bool b) { return Nat(b ? 0 : 1); }

bool sim_values(const Value& a, const Value& b) {
  // Primitive clause: v = v', |v| = v', v = |v'|, or |v| = |v'|.
  if (a.is_bool() && b.is_bool()) return a.boolean() == b.boolean();
  if (a.is_bool() && b.is_nat()) return bool_repr(a.boolean()) == b.nat();
  if (a.is_nat() && b.is_bool()) return a.nat() == bool_repr(b.boolean());
  if (a.is_nat() && b.is_nat()) return a.nat() == b.nat();
  if (a.is_unit() && b.is_unit()) return true;
  if (a.is_list() && b.is_list()) {
    const ValueList& x = a.list();
    const ValueList& y = b.list();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!sim(x[i], y[i])) return false;
    return true;
  }
  return false;
}

}  // namespace

bool sim(const MaybeValue& a, const MaybeValue& b) {
  if (!a.is_known() && !b.is_known()) return true;
  if (a.is_known() != b.is_known()) return false;
  return sim_values(a.get(), b.get());
}

void CompositeEnv::push(const std::string& var, CompositeValue v) {
  entries_.emplace_back(var, std::move(v));
}

void CompositeEnv::pop_top() { entries_.pop_back(); }

void CompositeEnv::update(const std::string& var, CompositeValue v) {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == var) {
      it->second = std::move(v);
      return;
    }
  }
  throw std::logic_error("composite env update of unbound '" + var + "'");
}

const CompositeValue& CompositeEnv::lookup(const std::string& var) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->first == var) return it->second;
  throw std::logic_error("composite env lookup of unbound '" + var + "'");
}

const std::pair<std::string, CompositeValue>& CompositeEnv::from_top(
    std::size_t i) const {
  return entries_[entries_.size() - 1 - i];
}

CompileState::CompileState(const Inputs& public_inputs, Nat modulus)
    : inputs_(&public_inputs), modulus_(std::move(modulus)) {}

NodeId CompileState::add_con(const Nat& v) {
  CircuitNode n;
  n.kind = CircuitNode::Kind::Con;
  n.value = v % modulus_;
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CompileState::add_input(Domain d, SourcePos pos) {
  CircuitNode n;
  n.kind = CircuitNode::Kind::In;
  n.domain = d;
  std::uint32_t& counter = nodes_empty_counts_[d == Domain::Prover ? 0 : 1];
  n.input_index = counter++;
  nodes_.push_back(std::move(n));
  NodeId id = static_cast<NodeId>(nodes_.size() - 1);
  sites_.push_back(InputSite{d, n.input_index, pos});
  return id;
}

NodeId CompileState::add_op(CircuitNode::Kind kind, NodeId l, NodeId r) {
  CircuitNode n;
  n.kind = kind;
  n.lhs = l;
  n.rhs = r;
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void CompileState::add_output(NodeId id) { outputs_.push_back(id); }

Circuit CompileState::finish() const {
  Circuit c;
  c.modulus = modulus_;
  c.nodes = nodes_;
  c.outputs = outputs_;
  c.input_count[0] = nodes_empty_counts_[0];
  c.input_count[1] = nodes_empty_counts_[1];
  return c;
}

namespace {

const QualType& type_of(const Expr& e) {
  if (!e.type) throw std::logic_error("compiling an untypechecked expression");
  return *e.type;
}

class Compiler {
 public:
  explicit Compiler(CompileState& state) : st_(state) {}

  CompositeValue compile(const Expr& e) {
    return std::visit([&](const auto& n) { return compile_node(e, n); },
                      e.node);
  }

 private:
  CompositeValue compile_node(const Expr&, const UnitLit&) {
    return comp_unit();
  }

  CompositeValue compile_node(const Expr& e, const NatLit& n) {
    const QualType& q = type_of(e);
    Nat v = q.data.has_modulus ? mod_reduce(n.value, st_.modulus()) : n.value;
    std::optional<NodeId> node;
    if (q.stage_or_pre() == Stage::Post) node = st_.add_con(v);
    if (q.domain == Domain::Public) return comp_nat(std::move(v), node);
    return node ? comp_node_only(*node) : comp_unknown();
  }

  CompositeValue compile_node(const Expr& e, const BoolLit& n) {
    const QualType& q = type_of(e);
    std::optional<NodeId> node;
    if (q.stage_or_pre() == Stage::Post) node = st_.add_con(bool_repr(n.value));
    if (q.domain == Domain::Public) return comp_bool(n.value, node);
    return node ? comp_node_only(*node) : comp_unknown();
  }

  CompositeValue compile_node(const Expr&, const VarRef& n) {
    return st_.env().lookup(n.name);
  }

  CompositeValue compile_node(const Expr& e, const BinOp& n) {
    CompositeValue a = compile(*n.lhs);
    CompositeValue b = compile(*n.rhs);
    bool has_modulus = type_of(*n.lhs).data.has_modulus;

    CompositeValue out;
    if (a.value_known() && b.value_known()) {
      Value av = to_runtime(*a.value);
      Value bv = to_runtime(*b.value);
      Value r = apply_pure(n.op, av, bv, has_modulus, e.pos);
      out.value = std::make_shared<const CompValue>(from_runtime(r));
    }
    if (a.node_known() && b.node_known())
      out.node = build_op_node(n.op, *a.node, *b.node, e.pos);
    return out;
  }

  // Lowers a $post operator to circuit nodes: add for +, mul for *, and
  // a - b as a + (N-1) * b.
  NodeId build_op_node(BinOpKind op, NodeId l, NodeId r, SourcePos pos) {
    switch (op) {
      case BinOpKind::Add:
        return st_.add_op(CircuitNode::Kind::Add, l, r);
      case BinOpKind::Mul:
        return st_.add_op(CircuitNode::Kind::Mul, l, r);
      case BinOpKind::Sub: {
        NodeId neg1 = st_.add_con(st_.modulus() - 1);
        NodeId negated = st_.add_op(CircuitNode::Kind::Mul, neg1, r);
        return st_.add_op(CircuitNode::Kind::Add, l, negated);
      }
      default:
        throw std::logic_error("operator not available in the circuit");
    }
  }

  // Inner-monad arithmetic over compile-time values, mirroring the local
  // semantics.
  Value apply_pure(BinOpKind op, const Value& a, const Value& b,
                   bool has_modulus, SourcePos pos) {
    if (binop_is_logic(op)) {
      bool x = a.boolean(), y = b.boolean();
      return Value{op == BinOpKind::And ? (x && y) : (x || y)};
    }
    const Nat& x = a.nat();
    const Nat& y = b.nat();
    const Nat& N = st_.modulus();
    switch (op) {
      case BinOpKind::Add: return Value{has_modulus ? Nat((x + y) % N) : Nat(x + y)};
      case BinOpKind::Sub:
        if (has_modulus) return Value{x >= y ? Nat(x - y) : Nat(x + N - y)};
        if (x < y) throw EvalFailure{"subtraction below zero", pos};
        return Value{Nat(x - y)};
      case BinOpKind::Mul: return Value{has_modulus ? Nat((x * y) % N) : Nat(x * y)};
      case BinOpKind::Div:
        if (y == 0) throw EvalFailure{"division by zero", pos};
        return Value{Nat(x / y)};
      case BinOpKind::Mod:
        if (y == 0) throw EvalFailure{"modulus by zero", pos};
        return Value{Nat(x % y)};
      case BinOpKind::Eq: return Value{x == y};
      case BinOpKind::Lt: return Value{x < y};
      case BinOpKind::Le: return Value{x <= y};
      default: break;
    }
    throw std::logic_error("apply_pure: unhandled operator");
  }

  static Value to_runtime(const CompValue& v) {
    return std::visit(
        [](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CompList>)
            throw std::logic_error("arithmetic on a list value");
          else
            return Value{x};
        },
        v.v);
  }

  static CompValue from_runtime(const Value& v) {
    return std::visit(
        [](const auto& x) -> CompValue {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ValueList>)
            throw std::logic_error("arithmetic produced a list");
          else
            return CompValue{x};
        },
        v.v);
  }

  CompositeValue compile_node(const Expr& e, const AssertExpr& n) {
    CompositeValue a = compile(*n.arg);
    if (!a.node_known())
      throw std::logic_error("assert argument compiled without a node");
    st_.add_output(*a.node);
    (void)e;
    return comp_unit();
  }

  CompositeValue compile_node(const Expr& e, const AssertZeroExpr& n) {
    CompositeValue a = compile(*n.arg);
    if (!a.node_known())
      throw std::logic_error("assert_zero argument compiled without a node");
    st_.add_output(*a.node);
    (void)e;
    return comp_unit();
  }

  CompositeValue compile_node(const Expr&, const GetExpr& n) {
    if (n.source != Domain::Public) return comp_unknown();
    const auto& dict = st_.inputs().at(Domain::Public);
    auto it = dict.find(n.key);
    if (it == dict.end())
      throw std::logic_error("missing public input key '" + n.key + "'");
    return allpuretop(it->second);
  }

  CompositeValue compile_node(const Expr&, const IfExpr& n) {
    CompositeValue g = compile(*n.guard);
    if (!g.value_known()) return comp_unknown();
    return g.value->boolean() ? compile(*n.then_e) : compile(*n.else_e);
  }

  CompositeValue compile_node(const Expr&, const ForExpr& n) {
    CompositeValue lo = compile(*n.lo);
    CompositeValue hi = compile(*n.hi);
    if (!lo.value_known() || !hi.value_known()) return comp_unknown();
    const Nat& i1 = lo.value->nat();
    const Nat& i2 = hi.value->nat();
    if (i2 <= i1) return comp_list({});
    Nat count = i2 - i1;
    CompList items;
    st_.env().push(n.var, comp_nat(i1, std::nullopt));
    for (Nat k = 0; k < count; ++k) {
      if (k != 0) st_.env().update(n.var, comp_nat(Nat(i1 + k), std::nullopt));
      items.push_back(compile(*n.body));
    }
    st_.env().pop_top();
    return comp_list(std::move(items));
  }

  CompositeValue compile_node(const Expr& e, const WireExpr& n) {
    CompositeValue b = compile(*n.body);
    const QualType& q = type_of(e);
    CompositeValue out;
    out.value = b.value;
    if (b.value_known()) {
      const CompValue& v = *b.value;
      if (v.is_nat())
        out.node = st_.add_con(v.nat());
      else if (v.is_bool())
        out.node = st_.add_con(bool_repr(v.boolean()));
      else
        throw std::logic_error("wire over a non-primitive value");
    } else {
      out.node = st_.add_input(q.domain, e.pos);
    }
    return out;
  }

  CompositeValue compile_node(const Expr& e, const CastExpr& n) {
    CompositeValue b = compile(*n.body);
    const QualType& target = type_of(e);
    CompositeValue out;
    if (target.domain == Domain::Public) out.value = b.value;
    if (target.stage_or_pre() == Stage::Post) out.node = b.node;
    return out;
  }

  CompositeValue compile_node(const Expr& e, const AssignExpr& n) {
    CompositeValue a = st_.env().lookup(n.lv.var);
    std::vector<CompositeValue> indices;
    indices.reserve(n.lv.indices.size());
    for (const auto& idx : n.lv.indices) indices.push_back(compile(*idx));
    CompositeValue v = compile(*n.rhs);
    CompositeValue updated;
    try {
      updated = upd_c(a, indices, v);
    } catch (EvalFailure& f) {
      f.pos = e.pos;
      throw;
    }
    st_.env().update(n.lv.var, std::move(updated));
    return comp_unit();
  }

  CompositeValue compile_node(const Expr& e, const LoadExpr& n) {
    CompositeValue a = st_.env().lookup(n.lv.var);
    for (const auto& idx : n.lv.indices) {
      CompositeValue i = compile(*idx);
      a = index_composite(a, i, e.pos);
    }
    CompositeValue i = compile(*n.index);
    return index_composite(a, i, e.pos);
  }

  CompositeValue index_composite(const CompositeValue& a,
                                 const CompositeValue& i, SourcePos pos) {
    if (!a.value_known() || !i.value_known()) return comp_unknown();
    const CompList& list = a.value->list();
    const Nat& n = i.value->nat();
    if (n >= list.size())
      throw EvalFailure{"index " + nat_to_string(n) +
                            " out of bounds for list of length " +
                            std::to_string(list.size()),
                        pos};
    return list[static_cast<std::size_t>(n)];
  }

  CompositeValue compile_node(const Expr&, const LetExpr& n) {
    CompositeValue bound = compile(*n.bound);
    st_.env().push(n.var, std::move(bound));
    CompositeValue v = compile(*n.rest);
    st_.env().pop_top();
    return v;
  }

  CompositeValue compile_node(const Expr&, const SeqExpr& n) {
    compile(*n.first);
    return compile(*n.rest);
  }

  CompositeValue compile_node(const Expr&, const CallExpr&) {
    throw std::logic_error("compiling a call expression");
  }

  CompileState& st_;
};

}  // namespace

CompositeValue compile_expr(const Expr& e, CompileState& state) {
  Compiler c(state);
  return c.compile(e);
}

std::variant<CompileOutput, CompileFailed> compile_program(
    const Program& p, const Inputs& public_inputs, const Nat& modulus) {
  CompileState state(public_inputs, modulus);
  try {
    compile_expr(*p.main().body, state);
  } catch (const EvalFailure& f) {
    return CompileFailed{f.reason, f.pos};
  }
  CompileOutput out;
  out.circuit = state.finish();
  out.input_sites = state.input_sites();
  return out;
}

}  // namespace zksc
