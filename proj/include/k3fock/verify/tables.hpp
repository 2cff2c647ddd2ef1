#pragma once

#include <string>
#include <vector>

#include "k3fock/fock/fock_space.hpp"
#include "k3fock/verify/config.hpp"

namespace k3fock::verify {

/// Dimension of the block A^i(Hilb_n)_{2s} of the model.
struct TableRow {
  int n = 0;
  int i = 0;
  Rational s;
  int dim = 0;
};

/// Rows for every level 0..cfg.n_max, from the joint codim/h̃ decomposition.
std::vector<TableRow> emit_tables(const SuiteConfig& cfg);
std::vector<TableRow> level_table(const fock::FockSpace& space, int n);

std::string tables_csv(const std::vector<TableRow>& rows);
std::string tables_text(const std::vector<TableRow>& rows);

}  // namespace k3fock::verify
