#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "zksc/conformance/gen.hpp"
#include "zksc/conformance/shrink.hpp"
#include "zksc/conformance/theorems.hpp"
#include "zksc/pretty.hpp"
#include "zksc/typecheck.hpp"

using namespace zksc;
using namespace zksc::conf;

namespace {

struct Summary {
  int trials = 0;
  int generator_failures = 0;
  std::map<Theorem, int> failures;
  std::vector<Counterexample> examples;
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_junit(const std::string& path, const Summary& s, double seconds) {
  std::ofstream out(path);
  int total_failures = s.generator_failures;
  for (const auto& [t, n] : s.failures) total_failures += n;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"zksc-conformance\" tests=\""
      << (kAllTheorems.size() + 1) << "\" failures=\"" << total_failures
      << "\" time=\"" << seconds << "\">\n";
  out << "  <testcase name=\"generator-soundness\">";
  if (s.generator_failures > 0)
    out << "<failure message=\"" << s.generator_failures
        << " generated programs failed to typecheck\"/>";
  out << "</testcase>\n";
  for (Theorem t : kAllTheorems) {
    out << "  <testcase name=\"" << theorem_name(t) << "\">";
    auto it = s.failures.find(t);
    if (it != s.failures.end() && it->second > 0) {
      std::string detail;
      for (const auto& cex : s.examples)
        if (cex.theorem == t) {
          detail = cex.detail + "\n" + cex.program;
          break;
        }
      out << "<failure message=\"" << it->second
          << " counterexamples\">" << xml_escape(detail) << "</failure>";
    }
    out << "</testcase>\n";
  }
  out << "</testsuite>\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zksc-conformance: generate programs and check the metatheory"};
  std::uint64_t seed = 1;
  int trials = 100;
  int depth = 5;
  int max_list = 4;
  std::string modulus = "97";
  std::string junit_path;
  bool verbose = false;
  app.add_option("--seed", seed, "master seed");
  app.add_option("--trials", trials, "number of generated programs");
  app.add_option("--depth", depth, "maximum expression depth");
  app.add_option("--max-list", max_list, "maximum list length");
  app.add_option("--modulus", modulus, "circuit modulus N");
  app.add_option("--junit", junit_path, "write a JUnit-style XML report here");
  app.add_flag("-v,--verbose", verbose, "print each counterexample in full");
  CLI11_PARSE(app, argc, argv);

  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = depth;
  cfg.max_list_len = max_list;
  auto n = nat_from_string(modulus);
  if (!n || *n < 2) {
    std::cerr << "bad --modulus\n";
    return 2;
  }
  cfg.modulus = *n;

  Summary summary;
  auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = static_cast<std::uint64_t>(trial);
    Program p = gen_program(cfg, trial_seed);
    try {
      typecheck_program(p, cfg.modulus);
    } catch (const TypeError& e) {
      ++summary.generator_failures;
      std::cerr << "[gen] trial " << trial
                << ": generated program failed to typecheck: " << e.what()
                << "\n"
                << pretty_print(p);
      continue;
    }
    std::seed_seq sq{cfg.seed ^ 0x1234567, trial_seed};
    std::mt19937_64 rng(sq);
    Inputs inputs = gen_inputs(cfg, rng, p);
    ++summary.trials;

    for (Theorem t : kAllTheorems) {
      auto cex = check_theorem(t, p, inputs, cfg.modulus);
      if (!cex) continue;
      ++summary.failures[t];
      // Shrink while the same theorem still fails.
      Program small = shrink_program(
          p, cfg.modulus, [&](const Program& candidate) {
            return check_theorem(t, candidate, inputs, cfg.modulus).has_value();
          });
      auto small_cex = check_theorem(t, small, inputs, cfg.modulus);
      Counterexample reported = small_cex ? *small_cex : *cex;
      std::cerr << "[FAIL] trial " << trial << " theorem "
                << theorem_name(t) << ": " << reported.detail << "\n";
      if (verbose)
        std::cerr << reported.program << "inputs:\n" << reported.inputs << "\n";
      summary.examples.push_back(std::move(reported));
    }
  }
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  int total_failures = summary.generator_failures;
  std::cout << (summary.generator_failures == 0 ? "[PASS] " : "[FAIL] ")
            << "generator-soundness: " << summary.trials << "/"
            << (summary.trials + summary.generator_failures)
            << " generated programs typecheck\n";
  for (Theorem t : kAllTheorems) {
    int n_fail = summary.failures.count(t) ? summary.failures[t] : 0;
    total_failures += n_fail;
    std::cout << (n_fail == 0 ? "[PASS] " : "[FAIL] ") << theorem_name(t)
              << ": " << (summary.trials - n_fail) << "/" << summary.trials
              << " trials\n";
  }
  std::cout << "checked " << summary.trials << " programs in " << elapsed
            << "s\n";
  if (!junit_path.empty()) write_junit(junit_path, summary, elapsed);
  return total_failures == 0 ? 0 : 1;
}
