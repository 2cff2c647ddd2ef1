#include "k3fock/verify/tables.hpp"

#include <iomanip>
#include <sstream>

#include "k3fock/ops/weights.hpp"

namespace k3fock::verify {

std::vector<TableRow> level_table(const fock::FockSpace& space, int n) {
  std::vector<TableRow> rows;
  for (const auto& b : ops::refined_decomposition(space, n)) {
    const Rational s = fault_active(Fault::kTableShift) ? b.weight.s + 1 : b.weight.s;
    rows.push_back({n, b.weight.i, s, static_cast<int>(b.basis.size())});
  }
  return rows;
}

std::vector<TableRow> emit_tables(const SuiteConfig& cfg) {
  cfg.validate();
  FaultGuard guard(cfg.fault);
  const fock::FockSpace space(cfg.lattice);
  std::vector<TableRow> rows;
  for (int n = 0; n <= cfg.n_max; ++n) {
    for (auto& row : level_table(space, n)) rows.push_back(std::move(row));
  }
  return rows;
}

std::string tables_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,i,s,dim\n";
  for (const auto& r : rows) os << r.n << "," << r.i << "," << r.s.get_str() << "," << r.dim << "\n";
  return os.str();
}

std::string tables_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(4) << "i" << std::setw(6) << "s" << std::setw(8) << "dim" << "\n";
  for (const auto& r : rows) {
    os << std::setw(4) << r.n << std::setw(4) << r.i << std::setw(6) << r.s.get_str() << std::setw(8) << r.dim << "\n";
  }
  return os.str();
}

}  // namespace k3fock::verify
