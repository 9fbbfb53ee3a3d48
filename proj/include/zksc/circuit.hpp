#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zksc/nat.hpp"
#include "zksc/types.hpp"

namespace zksc {

using NodeId = std::uint32_t;

struct CircuitNode {
  enum class Kind : std::uint8_t { Con, In, Add, Mul };
  Kind kind = Kind::Con;
  Nat value;                    // Con: residue mod N
  Domain domain = Domain::Prover;  // In: prover or verifier
  std::uint32_t input_index = 0;   // In: dense per-domain index
  NodeId lhs = 0, rhs = 0;         // Add/Mul: children, always < own id
};

// An arithmetic circuit over Z_N: a DAG of constant, input, and add/mul
// nodes held in an arena (children precede parents), with designated
// output nodes. It accepts an input assignment when every output node
// evaluates to zero.
struct Circuit {
  Nat modulus;
  std::vector<CircuitNode> nodes;
  std::vector<NodeId> outputs;
  std::uint32_t input_count[2] = {0, 0};  // [0] = prover, [1] = verifier

  std::uint32_t inputs_of(Domain d) const {
    return input_count[d == Domain::Prover ? 0 : 1];
  }
  // Throws std::invalid_argument if node references are not topological,
  // input indices are not dense per domain, or counts disagree.
  void validate() const;
};

bool equal_circuits(const Circuit& a, const Circuit& b);

struct InputAssignment {
  std::vector<Nat> prover;
  std::vector<Nat> verifier;

  const std::vector<Nat>& at(Domain d) const {
    return d == Domain::Prover ? prover : verifier;
  }
  std::vector<Nat>& at(Domain d) {
    return d == Domain::Prover ? prover : verifier;
  }
};

struct MissingInput {
  Domain domain;
  std::uint32_t index;
};

// |c|: evaluates a node without inputs; input nodes map to unknown
// (nullopt) and unknownness propagates through operations.
std::optional<Nat> eval_static(NodeId id, const Circuit& c);

// c(pi): evaluates a node under the input assignment. Always a pure value.
// Throws MissingInput if pi lacks an input index reachable from the node.
Nat eval_with_input(NodeId id, const Circuit& c, const InputAssignment& pi);

// True iff every output node evaluates to 0 under pi.
bool accepts(const Circuit& c, const InputAssignment& pi);

// Text format, one construct per line, LF-terminated:
//   zksc-circuit 1
//   modulus <N>
//   inputs prover <n>
//   inputs verifier <n>
//   node <id> con <v> | node <id> in <prover|verifier> <k>
//   node <id> add <l> <r> | node <id> mul <l> <r>
//   output <id>
std::string serialize(const Circuit& c);

struct FormatError {
  std::uint32_t line;
  std::string message;
};

// Throws FormatError with the offending line number.
Circuit deserialize(std::string_view text);

// con and add count as linear, as does mul with a constant child; mul with
// two non-constant children is non-linear.
struct GateStats {
  std::uint64_t linear = 0;
  std::uint64_t nonlinear = 0;
  std::uint32_t inputs_prover = 0;
  std::uint32_t inputs_verifier = 0;

  // "linear=<n> nonlinear=<m> inputs_prover=<p> inputs_verifier=<v>"
  std::string line() const;
};

GateStats gate_stats(const Circuit& c);

}  // namespace zksc
