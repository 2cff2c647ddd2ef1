#include "k3fock/verify/checks.hpp"

#include <algorithm>
#include <chrono>

#include "suites.hpp"

namespace k3fock::verify {

std::vector<Check> suite_checks(const std::string& suite) {
  auto out = detail::basic_suite(suite);
  if (out.empty()) out = detail::lie_suite(suite);
  if (out.empty()) out = detail::mult_suite(suite);
  return out;
}

std::string family_of(const std::string& id) { return id.substr(0, id.find('[')); }

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  FaultGuard guard(cfg.fault);
  const fock::FockSpace space(cfg.lattice);
  const Context ctx{space, cfg};
  Report report;
  for (const auto& suite : cfg.selected()) {
    for (const auto& check : suite_checks(suite)) {
      CheckResult res{check.id, check.anchor, check.params, Status::kPass, std::nullopt, 0};
      if (check.level > cfg.n_max || check.d > cfg.d_max || check.k > cfg.k_max || check.len > cfg.len_max) {
        res.status = Status::kSkipped;
        report.results.push_back(std::move(res));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        res.witness = check.run(ctx);
      } catch (const std::exception& e) {
        res.witness = Witness{"exception", "", e.what(), ""};
      }
      res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      if (res.witness) res.status = Status::kFail;
      report.results.push_back(std::move(res));
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace k3fock::verify
