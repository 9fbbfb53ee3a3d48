#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zksc/ast.hpp"
#include "zksc/circuit.hpp"
#include "zksc/value.hpp"

namespace zksc {

struct CompValue;

// A composite value: a maybe-known compile-time value paired with a
// maybe-existing circuit node. List elements are composite values
// themselves.
struct CompositeValue {
  std::shared_ptr<const CompValue> value;  // nullptr = unknown
  std::optional<NodeId> node;              // nullopt = no circuit

  bool value_known() const { return value != nullptr; }
  bool node_known() const { return node.has_value(); }
};

using CompList = std::vector<CompositeValue>;

struct CompValue {
  std::variant<Nat, bool, UnitValue, CompList> v;

  bool is_nat() const { return std::holds_alternative<Nat>(v); }
  bool is_bool() const { return std::holds_alternative<bool>(v); }
  bool is_unit() const { return std::holds_alternative<UnitValue>(v); }
  bool is_list() const { return std::holds_alternative<CompList>(v); }
  const Nat& nat() const { return std::get<Nat>(v); }
  bool boolean() const { return std::get<bool>(v); }
  const CompList& list() const { return std::get<CompList>(v); }
};

CompositeValue comp_unknown();
CompositeValue comp_nat(Nat n, std::optional<NodeId> node);
CompositeValue comp_bool(bool b, std::optional<NodeId> node);
CompositeValue comp_unit();
CompositeValue comp_list(CompList elems);
CompositeValue comp_node_only(NodeId node);

// Lifts a core value by inserting "known" and "no node" at each level.
CompositeValue allpuretop(const CoreValue& v);

// upd over composite values: as upd, but a rebuilt list drops its node
// component. Throws EvalFailure on a known index out of bounds.
CompositeValue upd_c(const CompositeValue& a,
                     std::span<const CompositeValue> indices,
                     const CompositeValue& v);

// (v,c) . pi: the monadic value a composite value denotes under circuit
// input pi. Prefers the known value (booleans via their integer encoding),
// else evaluates the node, else unknown.
MaybeValue bullet(const CompositeValue& cv, const Circuit& circuit,
                  const InputAssignment& pi);

// The ~ relation on maybe-values: equality up to the integer encoding of
// booleans, recursively on lists.
bool sim(const MaybeValue& a, const MaybeValue& b);

// Composite value environment, same stack discipline as Env.
class CompositeEnv {
 public:
  void push(const std::string& var, CompositeValue v);
  void pop_top();
  void update(const std::string& var, CompositeValue v);
  const CompositeValue& lookup(const std::string& var) const;
  std::size_t size() const { return entries_.size(); }
  const std::pair<std::string, CompositeValue>& from_top(std::size_t i) const;

 private:
  std::vector<std::pair<std::string, CompositeValue>> entries_;
};

// Source location of an input node's wire expression.
struct InputSite {
  Domain domain;
  std::uint32_t index;
  SourcePos pos;
};

// Compilation state: the composite environment, the circuit under
// construction, the output-node list, and the per-domain input counters.
class CompileState {
 public:
  CompileState(const Inputs& public_inputs, Nat modulus);

  CompositeEnv& env() { return env_; }
  const CompositeEnv& env() const { return env_; }

  NodeId add_con(const Nat& v);
  NodeId add_input(Domain d, SourcePos pos);
  NodeId add_op(CircuitNode::Kind kind, NodeId l, NodeId r);
  void add_output(NodeId id);

  std::uint32_t input_counter(Domain d) const {
    return nodes_empty_counts_[d == Domain::Prover ? 0 : 1];
  }
  std::size_t output_count() const { return outputs_.size(); }
  NodeId output_at(std::size_t i) const { return outputs_[i]; }

  const Inputs& inputs() const { return *inputs_; }
  const Nat& modulus() const { return modulus_; }

  // Packages the arena, outputs and counters into a Circuit.
  Circuit finish() const;
  const std::vector<InputSite>& input_sites() const { return sites_; }

  // View of the arena as a circuit without copying outputs (for bullet /
  // exactness checks during conformance runs).
  Circuit snapshot() const { return finish(); }

 private:
  CompositeEnv env_;
  std::vector<CircuitNode> nodes_;
  std::vector<NodeId> outputs_;
  std::uint32_t nodes_empty_counts_[2] = {0, 0};
  std::vector<InputSite> sites_;
  const Inputs* inputs_;
  Nat modulus_;
};

// Compiles a typechecked expression, mutating the state. Fails only on a
// known index out of bounds (throws EvalFailure).
CompositeValue compile_expr(const Expr& e, CompileState& state);

struct CompileOutput {
  Circuit circuit;
  std::vector<InputSite> input_sites;
};

struct CompileFailed {
  std::string reason;
  SourcePos pos;
};

// Runs compile_expr on main's body in the empty state.
std::variant<CompileOutput, CompileFailed> compile_program(
    const Program& p, const Inputs& public_inputs, const Nat& modulus);

}  // namespace zksc
