#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zksc/compile.hpp"
#include "zksc/eval.hpp"
#include "zksc/io.hpp"
#include "zksc/parser.hpp"
#include "zksc/typecheck.hpp"

namespace fs = std::filesystem;
using namespace zksc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string modulus = "2305843009213693951";
  std::string program_path;
  std::string public_path, instance_path, witness_path;
  std::string role = "prover";
  std::string out_path;
  std::string tamper;
};

// Trial-division screen; a warning aid, not a guarantee for large N.
bool looks_prime(const Nat& n) {
  if (n < 2) return false;
  for (Nat d = 2; d * d <= n && d < 2000; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::string> read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "cannot open '" + path + "'";
  std::ostringstream ss;
  ss << in.rdbuf();
  out = std::move(ss).str();
  return std::nullopt;
}

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

struct Loaded {
  Program program;
  Nat modulus;
};

std::optional<Loaded> load_program(const Options& opt, int& exit_code) {
  std::string source;
  if (auto err = read_file(opt.program_path, source)) {
    exit_code = fail_usage(*err);
    return std::nullopt;
  }
  auto modulus = nat_from_string(opt.modulus);
  if (!modulus || *modulus < 2) {
    exit_code = fail_usage("--modulus must be a natural number >= 2");
    return std::nullopt;
  }
  if (!looks_prime(*modulus))
    std::cerr << "warning: modulus " << opt.modulus
              << " does not look prime; most proof systems require a prime\n";
  try {
    Program p = parse(source);
    typecheck_program(p, *modulus);
    return Loaded{std::move(p), std::move(*modulus)};
  } catch (const SyntaxError& e) {
    std::cerr << format_diagnostic(opt.program_path, e.pos(), "SyntaxError",
                                   e.what())
              << "\n";
    exit_code = kExitSemantic;
  } catch (const TypeError& e) {
    std::cerr << format_diagnostic(opt.program_path, e.pos(),
                                   type_error_code_name(e.code()), e.what())
              << "\n";
    exit_code = kExitSemantic;
  }
  return std::nullopt;
}

std::optional<int> load_dict(const std::string& path, Domain d, Inputs& inputs) {
  if (path.empty()) return std::nullopt;
  std::string text;
  if (auto err = read_file(path, text)) return fail_usage(*err);
  try {
    inputs.at(d) = parse_input_dict(text);
  } catch (const InputFormatError& e) {
    return fail_usage(path + ": " + e.message);
  }
  return std::nullopt;
}

int validate_for_domains(const Loaded& loaded, Inputs& inputs,
                         const std::vector<Domain>& domains) {
  try {
    validate_inputs(collect_get_sites(loaded.program), inputs, domains,
                    loaded.modulus);
  } catch (const InputFormatError& e) {
    return fail_usage(e.message);
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  int exit_code = kExitOk;
  if (!load_program(opt, exit_code)) return exit_code;
  std::cout << "ok\n";
  return kExitOk;
}

int write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail_usage("cannot write '" + path + "'");
  out << text;
  return kExitOk;
}

int cmd_compile(const Options& opt) {
  int exit_code = kExitOk;
  auto loaded = load_program(opt, exit_code);
  if (!loaded) return exit_code;
  Inputs inputs;
  if (auto rc = load_dict(opt.public_path, Domain::Public, inputs)) return *rc;
  if (int rc = validate_for_domains(*loaded, inputs, {Domain::Public})) return rc;

  auto result = compile_program(loaded->program, inputs, loaded->modulus);
  if (const auto* failed = std::get_if<CompileFailed>(&result)) {
    std::cerr << format_diagnostic(opt.program_path, failed->pos, "CompileError",
                                   failed->reason)
              << "\n";
    return kExitSemantic;
  }
  const auto& out = std::get<CompileOutput>(result);
  std::string circuit_path =
      opt.out_path.empty() ? opt.program_path + ".circuit" : opt.out_path;
  if (int rc = write_text(circuit_path, serialize(out.circuit))) return rc;
  if (int rc = write_text(circuit_path + ".manifest.json",
                          manifest_to_json(out.input_sites, opt.program_path)))
    return rc;
  std::cout << gate_stats(out.circuit).line() << "\n";
  return kExitOk;
}

std::optional<Domain> role_from_string(const std::string& role) {
  if (role == "public") return Domain::Public;
  if (role == "verifier") return Domain::Verifier;
  if (role == "prover") return Domain::Prover;
  return std::nullopt;
}

int cmd_run(const Options& opt) {
  int exit_code = kExitOk;
  auto loaded = load_program(opt, exit_code);
  if (!loaded) return exit_code;
  auto role = role_from_string(opt.role);
  if (!role) return fail_usage("--role must be public, verifier, or prover");

  Inputs inputs;
  std::vector<Domain> needed;
  for (Domain d : {Domain::Public, Domain::Verifier, Domain::Prover})
    if (domain_le(d, *role)) needed.push_back(d);
  if (auto rc = load_dict(opt.public_path, Domain::Public, inputs)) return *rc;
  if (domain_le(Domain::Verifier, *role))
    if (auto rc = load_dict(opt.instance_path, Domain::Verifier, inputs))
      return *rc;
  if (domain_le(Domain::Prover, *role))
    if (auto rc = load_dict(opt.witness_path, Domain::Prover, inputs)) return *rc;
  if (int rc = validate_for_domains(*loaded, inputs, needed)) return rc;

  LocalResult r = eval_local(*role, *loaded->program.main().body, Env{}, inputs,
                             loaded->modulus);
  if (!r.ok) {
    std::cerr << format_diagnostic(opt.program_path, r.failure_pos, "Failure",
                                   r.failure)
              << "\n";
    return kExitSemantic;
  }
  fs::path dir = opt.out_path.empty() ? fs::path(".") : fs::path(opt.out_path);
  auto emit = [&](Domain d, const char* name) -> int {
    std::vector<Nat> entries = encode_stream(r.out.at(d));
    return write_text((dir / name).string(), stream_to_json(entries));
  };
  if (*role == Domain::Prover) {
    if (int rc = emit(Domain::Prover, "prover.stream")) return rc;
    if (int rc = emit(Domain::Verifier, "verifier.stream")) return rc;
    std::cout << "wrote prover.stream (" << r.out.prover.size()
              << " entries) and verifier.stream (" << r.out.verifier.size()
              << " entries)\n";
  } else if (*role == Domain::Verifier) {
    if (int rc = emit(Domain::Verifier, "verifier.stream")) return rc;
    std::cout << "wrote verifier.stream (" << r.out.verifier.size()
              << " entries)\n";
  } else {
    std::cout << "public view succeeded; stream entries are above the public "
                 "domain, nothing written\n";
  }
  return kExitOk;
}

std::optional<int> apply_tamper(const std::string& spec, InputAssignment& pi,
                                const Nat& modulus) {
  if (spec.empty()) return std::nullopt;
  // <domain>:<index>:<delta>, e.g. prover:0:+1
  auto first = spec.find(':');
  auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    return fail_usage("--tamper expects <domain>:<index>:<delta>");
  std::string dom = spec.substr(0, first);
  std::string idx_s = spec.substr(first + 1, second - first - 1);
  std::string delta_s = spec.substr(second + 1);
  auto role = role_from_string(dom);
  if (!role || *role == Domain::Public)
    return fail_usage("--tamper domain must be prover or verifier");
  auto idx = nat_from_string(idx_s);
  if (!idx) return fail_usage("--tamper index must be a natural");
  bool negative = !delta_s.empty() && delta_s[0] == '-';
  if (!delta_s.empty() && (delta_s[0] == '+' || delta_s[0] == '-'))
    delta_s.erase(0, 1);
  auto delta = nat_from_string(delta_s);
  if (!delta) return fail_usage("--tamper delta must be an integer");
  auto& values = pi.at(*role);
  if (*idx >= values.size()) return fail_usage("--tamper index out of range");
  std::size_t i = static_cast<std::size_t>(*idx);
  Nat d = *delta % modulus;
  values[i] = negative ? Nat((values[i] + modulus - d) % modulus)
                       : Nat((values[i] + d) % modulus);
  return std::nullopt;
}

int cmd_prove(const Options& opt) {
  int exit_code = kExitOk;
  auto loaded = load_program(opt, exit_code);
  if (!loaded) return exit_code;
  Inputs inputs;
  if (auto rc = load_dict(opt.public_path, Domain::Public, inputs)) return *rc;
  if (auto rc = load_dict(opt.instance_path, Domain::Verifier, inputs))
    return *rc;
  if (auto rc = load_dict(opt.witness_path, Domain::Prover, inputs)) return *rc;
  if (int rc = validate_for_domains(
          *loaded, inputs, {Domain::Public, Domain::Verifier, Domain::Prover}))
    return rc;

  const Expr& body = *loaded->program.main().body;
  LocalResult r =
      eval_local(Domain::Prover, body, Env{}, inputs, loaded->modulus);
  if (!r.ok) {
    std::cerr << format_diagnostic(opt.program_path, r.failure_pos, "Failure",
                                   r.failure)
              << "\n";
    std::cout << "REJECT\n";
    return kExitSemantic;
  }
  auto result = compile_program(loaded->program, inputs, loaded->modulus);
  if (const auto* failed = std::get_if<CompileFailed>(&result)) {
    std::cerr << format_diagnostic(opt.program_path, failed->pos, "CompileError",
                                   failed->reason)
              << "\n";
    return kExitSemantic;
  }
  const Circuit& circuit = std::get<CompileOutput>(result).circuit;
  InputAssignment pi = streams_to_assignment(r.out);
  bool tampered = !opt.tamper.empty();
  if (auto rc = apply_tamper(opt.tamper, pi, loaded->modulus)) return *rc;

  bool accepted = accepts(circuit, pi);
  if (!tampered) {
    // The circuit-semantics replay must agree with acceptance.
    CircuitResult c = eval_circuit(body, Env{}, inputs, r.out, loaded->modulus);
    if (c.ok() != accepted) {
      std::cerr << "internal error: circuit semantics and acceptance disagree\n";
      return kExitSemantic;
    }
  }
  std::cout << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return accepted ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zksc: typecheck, run, and compile zksc programs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool inputs) {
    cmd->add_option("program", opt.program_path, "path to a .zksc source file")
        ->required();
    cmd->add_option("--modulus", opt.modulus, "the circuit modulus N (decimal)");
    if (inputs) {
      cmd->add_option("--public", opt.public_path, "public constants (JSON)");
      cmd->add_option("--instance", opt.instance_path,
                      "verifier-visible instance (JSON)");
      cmd->add_option("--witness", opt.witness_path,
                      "prover-only witness (JSON)");
    }
  };

  CLI::App* check = app.add_subcommand("check", "parse and typecheck");
  add_common(check, false);

  CLI::App* compile = app.add_subcommand("compile", "compile to a circuit");
  add_common(compile, true);
  compile->add_option("-o,--output", opt.out_path, "circuit output path");

  CLI::App* run = app.add_subcommand("run", "run one party's local view");
  add_common(run, true);
  run->add_option("--role", opt.role, "public, verifier, or prover");
  run->add_option("-o,--output", opt.out_path, "output directory for streams");

  CLI::App* prove =
      app.add_subcommand("prove", "run, compile, and check acceptance");
  add_common(prove, true);
  prove->add_option("--tamper", opt.tamper,
                    "mutate one circuit input: <domain>:<index>:<delta>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (compile->parsed()) return cmd_compile(opt);
    if (run->parsed()) return cmd_run(opt);
    if (prove->parsed()) return cmd_prove(opt);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
