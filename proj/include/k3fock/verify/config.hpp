#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "k3fock/faults.hpp"
#include "k3fock/taut/ring.hpp"

namespace k3fock::verify {

enum class Format { kText, kJson };

struct SuiteConfig {
  int n_max = 3;
  taut::DivisorLattice lattice;     // rank 1, gram (2)
  std::vector<std::string> suites;  // empty selection list means every suite
  bool all_suites = true;
  int d_max = 4;
  int k_max = 5;
  int len_max = 3;
  Format format = Format::kText;
  std::string out;  // empty: standard output
  unsigned seed = 1;
  bool timing = true;
  Fault fault = Fault::kNone;

  /// Selected suites in canonical order.
  std::vector<std::string> selected() const;
  /// Throws UsageError when an invariant is violated.
  void validate() const;
};

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every suite name in canonical order.
const std::vector<std::string>& suite_names();

/// Parses verify options (without the subcommand). A `--config FILE` is read
/// first (INI or TOML, same keys as the long options); flags override it.
/// `--suite` may be repeated; `--suite none` selects nothing.
SuiteConfig parse_config(const std::vector<std::string>& args);

}  // namespace k3fock::verify
