#include "zksc/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace zksc {

void Circuit::validate() const {
  std::vector<char> seen[2];
  seen[0].assign(input_count[0], 0);
  seen[1].assign(input_count[1], 0);
  std::uint32_t counts[2] = {0, 0};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const CircuitNode& n = nodes[i];
    switch (n.kind) {
      case CircuitNode::Kind::Con:
        if (n.value >= modulus)
          throw std::invalid_argument("constant not reduced mod N at node " +
                                      std::to_string(i));
        break;
      case CircuitNode::Kind::In: {
        if (n.domain == Domain::Public)
          throw std::invalid_argument("public input node " + std::to_string(i));
        int which = n.domain == Domain::Prover ? 0 : 1;
        if (n.input_index >= seen[which].size() || seen[which][n.input_index])
          throw std::invalid_argument("input indices not dense at node " +
                                      std::to_string(i));
        seen[which][n.input_index] = 1;
        ++counts[which];
        break;
      }
      case CircuitNode::Kind::Add:
      case CircuitNode::Kind::Mul:
        if (n.lhs >= i || n.rhs >= i)
          throw std::invalid_argument("node " + std::to_string(i) +
                                      " references a non-preceding child");
        break;
    }
  }
  if (counts[0] != input_count[0] || counts[1] != input_count[1])
    throw std::invalid_argument("declared input counts disagree with nodes");
  for (NodeId out : outputs)
    if (out >= nodes.size())
      throw std::invalid_argument("output references missing node " +
                                  std::to_string(out));
}

bool equal_circuits(const Circuit& a, const Circuit& b) {
  if (a.modulus != b.modulus || a.nodes.size() != b.nodes.size() ||
      a.outputs != b.outputs || a.input_count[0] != b.input_count[0] ||
      a.input_count[1] != b.input_count[1])
    return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const CircuitNode& x = a.nodes[i];
    const CircuitNode& y = b.nodes[i];
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case CircuitNode::Kind::Con:
        if (x.value != y.value) return false;
        break;
      case CircuitNode::Kind::In:
        if (x.domain != y.domain || x.input_index != y.input_index)
          return false;
        break;
      default:
        if (x.lhs != y.lhs || x.rhs != y.rhs) return false;
    }
  }
  return true;
}

namespace {

// Iterative post-order walk over the nodes reachable from `root`, invoking
// `visit(id)` once per node with all children already visited.
template <class F>
void walk_reachable(NodeId root, const Circuit& c, F&& visit) {
  std::vector<char> done(c.nodes.size(), 0);
  std::vector<std::pair<NodeId, bool>> stack;
  stack.emplace_back(root, false);
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (done[id]) continue;
    const CircuitNode& n = c.nodes[id];
    bool is_op = n.kind == CircuitNode::Kind::Add ||
                 n.kind == CircuitNode::Kind::Mul;
    if (expanded || !is_op) {
      visit(id);
      done[id] = 1;
    } else {
      stack.emplace_back(id, true);
      stack.emplace_back(n.rhs, false);
      stack.emplace_back(n.lhs, false);
    }
  }
}

}  // namespace

std::optional<Nat> eval_static(NodeId id, const Circuit& c) {
  std::vector<std::optional<Nat>> memo(c.nodes.size());
  std::vector<char> known(c.nodes.size(), 0);
  walk_reachable(id, c, [&](NodeId i) {
    const CircuitNode& n = c.nodes[i];
    switch (n.kind) {
      case CircuitNode::Kind::Con:
        memo[i] = n.value;
        known[i] = 1;
        break;
      case CircuitNode::Kind::In:
        break;  // unknown
      case CircuitNode::Kind::Add:
      case CircuitNode::Kind::Mul:
        if (known[n.lhs] && known[n.rhs]) {
          Nat v = n.kind == CircuitNode::Kind::Add
                      ? Nat(*memo[n.lhs] + *memo[n.rhs])
                      : Nat(*memo[n.lhs] * *memo[n.rhs]);
          memo[i] = v % c.modulus;
          known[i] = 1;
        }
        break;
    }
  });
  return memo[id];
}

Nat eval_with_input(NodeId id, const Circuit& c, const InputAssignment& pi) {
  std::vector<Nat> memo(c.nodes.size());
  walk_reachable(id, c, [&](NodeId i) {
    const CircuitNode& n = c.nodes[i];
    switch (n.kind) {
      case CircuitNode::Kind::Con:
        memo[i] = n.value;
        break;
      case CircuitNode::Kind::In: {
        const std::vector<Nat>& vals = pi.at(n.domain);
        if (n.input_index >= vals.size())
          throw MissingInput{n.domain, n.input_index};
        memo[i] = vals[n.input_index] % c.modulus;
        break;
      }
      case CircuitNode::Kind::Add:
        memo[i] = (memo[n.lhs] + memo[n.rhs]) % c.modulus;
        break;
      case CircuitNode::Kind::Mul:
        memo[i] = (memo[n.lhs] * memo[n.rhs]) % c.modulus;
        break;
    }
  });
  return memo[id];
}

bool accepts(const Circuit& c, const InputAssignment& pi) {
  for (NodeId out : c.outputs)
    if (eval_with_input(out, c, pi) != 0) return false;
  return true;
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "zksc-circuit 1\n";
  out << "modulus " << nat_to_string(c.modulus) << "\n";
  out << "inputs prover " << c.input_count[0] << "\n";
  out << "inputs verifier " << c.input_count[1] << "\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CircuitNode& n = c.nodes[i];
    out << "node " << i << " ";
    switch (n.kind) {
      case CircuitNode::Kind::Con:
        out << "con " << nat_to_string(n.value);
        break;
      case CircuitNode::Kind::In:
        out << "in " << domain_name(n.domain) << " " << n.input_index;
        break;
      case CircuitNode::Kind::Add:
        out << "add " << n.lhs << " " << n.rhs;
        break;
      case CircuitNode::Kind::Mul:
        out << "mul " << n.lhs << " " << n.rhs;
        break;
    }
    out << "\n";
  }
  for (NodeId o : c.outputs) out << "output " << o << "\n";
  return std::move(out).str();
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t offset = 0;
  std::uint32_t line_no = 0;

  bool next(std::string& line) {
    if (offset >= text.size()) return false;
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    line.assign(text.substr(offset, end - offset));
    offset = end + 1;
    ++line_no;
    return true;
  }
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

Nat parse_nat_or_throw(const std::string& s, std::uint32_t line) {
  auto n = nat_from_string(s);
  if (!n) throw FormatError{line, "expected a natural number, found '" + s + "'"};
  return *n;
}

std::uint32_t parse_u32_or_throw(const std::string& s, std::uint32_t line) {
  Nat n = parse_nat_or_throw(s, line);
  if (n > 0xffffffffu) throw FormatError{line, "value out of range: " + s};
  return static_cast<std::uint32_t>(n);
}

}  // namespace

Circuit deserialize(std::string_view text) {
  LineReader reader{text};
  std::string line;
  auto expect_line = [&](const std::string& what) -> std::vector<std::string> {
    if (!reader.next(line))
      throw FormatError{reader.line_no + 1, "unexpected end of file, expected " + what};
    return split_words(line);
  };

  auto header = expect_line("the header");
  if (header.size() != 2 || header[0] != "zksc-circuit" || header[1] != "1")
    throw FormatError{reader.line_no, "bad header, expected 'zksc-circuit 1'"};

  Circuit c;
  auto mod = expect_line("'modulus <N>'");
  if (mod.size() != 2 || mod[0] != "modulus")
    throw FormatError{reader.line_no, "expected 'modulus <N>'"};
  c.modulus = parse_nat_or_throw(mod[1], reader.line_no);
  if (c.modulus < 2) throw FormatError{reader.line_no, "modulus must be at least 2"};

  for (const char* dom : {"prover", "verifier"}) {
    auto in = expect_line("'inputs <domain> <n>'");
    if (in.size() != 3 || in[0] != "inputs" || in[1] != dom)
      throw FormatError{reader.line_no,
                        std::string("expected 'inputs ") + dom + " <n>'"};
    c.input_count[std::string_view(dom) == "prover" ? 0 : 1] =
        parse_u32_or_throw(in[2], reader.line_no);
  }

  bool seen_output = false;
  while (reader.next(line)) {
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "node") {
      if (seen_output)
        throw FormatError{reader.line_no, "node after output section"};
      if (words.size() < 3) throw FormatError{reader.line_no, "short node line"};
      std::uint32_t id = parse_u32_or_throw(words[1], reader.line_no);
      if (id != c.nodes.size())
        throw FormatError{reader.line_no,
                          "node ids must be consecutive from 0; expected " +
                              std::to_string(c.nodes.size())};
      CircuitNode n;
      const std::string& kind = words[2];
      if (kind == "con") {
        if (words.size() != 4) throw FormatError{reader.line_no, "bad con node"};
        n.kind = CircuitNode::Kind::Con;
        n.value = parse_nat_or_throw(words[3], reader.line_no);
        if (n.value >= c.modulus)
          throw FormatError{reader.line_no, "constant not reduced mod N"};
      } else if (kind == "in") {
        if (words.size() != 5) throw FormatError{reader.line_no, "bad in node"};
        n.kind = CircuitNode::Kind::In;
        if (words[3] == "prover") n.domain = Domain::Prover;
        else if (words[3] == "verifier") n.domain = Domain::Verifier;
        else throw FormatError{reader.line_no, "bad input domain '" + words[3] + "'"};
        n.input_index = parse_u32_or_throw(words[4], reader.line_no);
      } else if (kind == "add" || kind == "mul") {
        if (words.size() != 5) throw FormatError{reader.line_no, "bad op node"};
        n.kind = kind == "add" ? CircuitNode::Kind::Add : CircuitNode::Kind::Mul;
        n.lhs = parse_u32_or_throw(words[3], reader.line_no);
        n.rhs = parse_u32_or_throw(words[4], reader.line_no);
        if (n.lhs >= id || n.rhs >= id)
          throw FormatError{reader.line_no,
                            "op node must reference earlier nodes"};
      } else {
        throw FormatError{reader.line_no, "unknown node kind '" + kind + "'"};
      }
      c.nodes.push_back(std::move(n));
    } else if (words[0] == "output") {
      seen_output = true;
      if (words.size() != 2) throw FormatError{reader.line_no, "bad output line"};
      std::uint32_t id = parse_u32_or_throw(words[1], reader.line_no);
      if (id >= c.nodes.size())
        throw FormatError{reader.line_no, "output references missing node"};
      c.outputs.push_back(id);
    } else {
      throw FormatError{reader.line_no, "unknown construct '" + words[0] + "'"};
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError{reader.line_no, e.what()};
  }
  return c;
}

std::string GateStats::line() const {
  std::ostringstream out;
  out << "linear=" << linear << " nonlinear=" << nonlinear
      << " inputs_prover=" << inputs_prover
      << " inputs_verifier=" << inputs_verifier;
  return std::move(out).str();
}

GateStats gate_stats(const Circuit& c) {
  GateStats s;
  s.inputs_prover = c.input_count[0];
  s.inputs_verifier = c.input_count[1];
  for (const CircuitNode& n : c.nodes) {
    switch (n.kind) {
      case CircuitNode::Kind::Con:
      case CircuitNode::Kind::Add:
        ++s.linear;
        break;
      case CircuitNode::Kind::Mul: {
        bool lc = c.nodes[n.lhs].kind == CircuitNode::Kind::Con;
        bool rc = c.nodes[n.rhs].kind == CircuitNode::Kind::Con;
        if (lc || rc)
          ++s.linear;
        else
          ++s.nonlinear;
        break;
      }
      case CircuitNode::Kind::In:
        break;
    }
  }
  return s;
}

}  // namespace zksc
