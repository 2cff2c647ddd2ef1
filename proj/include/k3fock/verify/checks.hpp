#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3fock/fock/fock_space.hpp"
#include "k3fock/verify/config.hpp"
#include "k3fock/verify/report.hpp"

namespace k3fock::verify {

struct Context {
  const fock::FockSpace& space;
  const SuiteConfig& cfg;
};

/// One identity instantiated at fixed parameters. `run` returns a witness on
/// failure and nothing on success.
struct Check {
  std::string id;
  std::string anchor;
  nlohmann::ordered_json params;
  // Bounds the check needs; it is skipped when one exceeds the config.
  int level = 0;
  int d = 0;
  int k = 0;
  int len = 0;
  std::function<std::optional<Witness>(const Context&)> run;
};

/// Checks of one suite at their nominal ranges, independent of the config.
std::vector<Check> suite_checks(const std::string& suite);

/// Identity family of a check id: the id without its `[...]` parameters.
std::string family_of(const std::string& id);

/// Runs the selected suites (under cfg.fault) and sorts the results by id.
/// Throws UsageError for an unknown suite.
Report run_suite(const SuiteConfig& cfg);

}  // namespace k3fock::verify
