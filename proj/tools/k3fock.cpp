// k3fock verify | tables | catalogue
//
// Exit codes: 0 when every selected check passes, 1 on a check failure,
// 2 on a usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "k3fock/verify/catalogue.hpp"
#include "k3fock/verify/checks.hpp"
#include "k3fock/verify/config.hpp"
#include "k3fock/verify/tables.hpp"

namespace {

using namespace k3fock::verify;

constexpr const char* kUsage =
    "usage: k3fock verify [--n N] [--rho R] [--gram \"...\"] [--suite NAME]... [--format json|text]\n"
    "                     [--out PATH] [--seed S] [--d-max D] [--k-max K] [--len-max L] [--no-timing]\n"
    "                     [--config FILE]\n"
    "       k3fock tables [--n N] [--rho R] [--gram \"...\"] [--format json|text] [--out PATH]\n"
    "       k3fock catalogue [--out PATH]\n";

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run(const std::string& cmd, const std::vector<std::string>& args) {
  if (cmd == "verify") {
    const SuiteConfig cfg = parse_config(args);
    const Report report = run_suite(cfg);
    const std::string text =
        cfg.format == Format::kJson ? report.to_json(cfg.timing).dump(2) + "\n" : report.to_text(cfg.timing);
    if (const int rc = emit(text, cfg.out)) return rc;
    return report.passed() ? 0 : 1;
  }
  if (cmd == "tables") {
    const SuiteConfig cfg = parse_config(args);
    const auto rows = emit_tables(cfg);
    return emit(cfg.format == Format::kJson ? tables_csv(rows) : tables_text(rows), cfg.out);
  }
  if (cmd == "catalogue") {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--out" && i + 1 < args.size()) {
        out = args[++i];
      } else {
        throw UsageError("unknown catalogue option: " + args[i]);
      }
    }
    return emit(catalogue_text(), out);
  }
  throw UsageError(cmd.empty() ? "missing subcommand" : "unknown subcommand: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cmd = argc > 1 ? argv[1] : "";
  if (cmd == "--help" || cmd == "-h") {
    std::cout << kUsage;
    return 0;
  }
  std::vector<std::string> args(argv + std::min(argc, 2), argv + argc);
  try {
    return run(cmd, args);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
