#include "k3fock/verify/config.hpp"

#include <algorithm>

#include "CLI11.hpp"

namespace k3fock::verify {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring",        "heisenberg",  "diagonal", "projectors", "lqw",
                                              "llv",         "commutators", "derivations", "chern",   "tables"};
  return names;
}

std::vector<std::string> SuiteConfig::selected() const {
  if (all_suites) return suite_names();
  std::vector<std::string> out;
  for (const auto& name : suite_names()) {
    if (std::find(suites.begin(), suites.end(), name) != suites.end()) out.push_back(name);
  }
  return out;
}

void SuiteConfig::validate() const {
  if (n_max < 0) throw UsageError("--n must be non-negative");
  if (d_max <= 0 || k_max <= 0 || len_max <= 0) throw UsageError("bounds must be positive");
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite: " + s);
    }
  }
}

namespace {

/// Hyperbolic planes, then (2) for an odd leftover rank.
taut::DivisorLattice default_lattice(int rank) {
  std::vector<std::vector<Rational>> gram(rank, std::vector<Rational>(rank));
  if (rank == 1) {
    gram[0][0] = 2;
    return taut::DivisorLattice(gram);
  }
  int i = 0;
  for (; i + 1 < rank; i += 2) gram[i][i + 1] = gram[i + 1][i] = 1;
  if (i < rank) gram[i][i] = 2;
  return taut::DivisorLattice(gram);
}

}  // namespace

SuiteConfig parse_config(const std::vector<std::string>& args) {
  SuiteConfig cfg;
  CLI::App app{"verify"};
  app.set_config("--config", "", "read options from an INI or TOML file");
  int rho = 0;
  std::string gram;
  std::string format = "text";
  std::string fault;
  bool no_timing = false;
  app.add_option("--n", cfg.n_max, "highest Hilbert scheme level (default 3)");
  app.add_option("--rho", rho, "lattice rank; without --gram uses hyperbolic planes");
  app.add_option("--gram", gram, "intersection matrix, rows separated by ';'");
  app.add_option("--suite", cfg.suites, "suite to run (repeatable; 'none' for no suite)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--seed", cfg.seed, "seed for randomized rule-order checks");
  app.add_option("--d-max", cfg.d_max, "largest G/J degree");
  app.add_option("--k-max", cfg.k_max, "largest diagonal length and Heisenberg index");
  app.add_option("--len-max", cfg.len_max, "longest Nakajima word");
  app.add_flag("--no-timing", no_timing, "report 0 ms for every check");
  app.add_option("--inject-fault", fault)->group("");

  std::vector<const char*> argv{"verify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (!gram.empty()) {
    try {
      cfg.lattice = taut::DivisorLattice::parse(gram);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --gram: ") + e.what());
    }
    if (rho != 0 && rho != cfg.lattice.rank()) throw UsageError("--rho disagrees with the rank of --gram");
  } else if (rho != 0) {
    if (rho < 0) throw UsageError("--rho must be positive");
    cfg.lattice = default_lattice(rho);
  }
  cfg.format = format == "json" ? Format::kJson : Format::kText;
  cfg.timing = !no_timing;
  if (!fault.empty()) {
    const auto f = parse_fault(fault);
    if (!f) throw UsageError("unknown fault: " + fault);
    cfg.fault = *f;
  }
  if (!cfg.suites.empty()) {
    cfg.all_suites = false;
    std::erase(cfg.suites, std::string("none"));
  }
  cfg.validate();
  return cfg;
}

}  // namespace k3fock::verify
