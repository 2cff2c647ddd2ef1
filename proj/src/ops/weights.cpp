#include "k3fock/ops/weights.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "k3fock/ops/operators.hpp"

namespace k3fock::ops {

namespace {

using Column = std::vector<Rational>;

struct Block {
  std::vector<Rational> eigenvalues;
  std::vector<Column> cols;
};

/// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(DenseMatrix& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = row;
    while (p < nrows && a[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Column apply_dense(const DenseMatrix& m, const Column& v) {
  Column out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0 && m[r][c] != 0) acc += m[r][c] * v[c];
    }
    out[r] = acc;
  }
  return out;
}

/// R with basis·R = images, or an error when an image leaves the span.
DenseMatrix restrict_to(const std::vector<Column>& basis, const std::vector<Column>& images) {
  const int d = static_cast<int>(basis.size());
  const int n = basis.empty() ? 0 : static_cast<int>(basis.front().size());
  DenseMatrix aug(n, Column(2 * d));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < d; ++j) {
      aug[r][j] = basis[j][r];
      aug[r][d + j] = images[j][r];
    }
  }
  const auto pivots = row_reduce(aug, 2 * d);
  if (static_cast<int>(pivots.size()) != d || (d > 0 && pivots.back() >= d)) {
    throw WeightDecompositionError("operators do not commute: a joint eigenspace is not invariant");
  }
  DenseMatrix out(d, Column(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out[i][j] = aug[i][d + j];
  }
  return out;
}

std::optional<Rational> rationalize(double x) {
  for (long q = 1; q <= 64; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x - p / static_cast<double>(q)) < 1e-7) return rational(static_cast<long>(p), q);
  }
  return std::nullopt;
}

std::vector<Rational> candidate_eigenvalues(const DenseMatrix& r) {
  const int d = static_cast<int>(r.size());
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = r[i][j].get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<Rational> out;
  for (int i = 0; i < d; ++i) {
    const auto z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-7) continue;
    const auto q = rationalize(z.real());
    if (q && std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<Rational>& eig) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < eig.size(); ++i) os << (i ? ", " : "") << eig[i].get_str();
  os << ")";
  return os.str();
}

std::vector<Block> split(const std::vector<Block>& blocks, const DenseMatrix& m, int op_index) {
  std::vector<Block> out;
  for (const auto& b : blocks) {
    const int d = static_cast<int>(b.cols.size());
    std::vector<Column> images;
    images.reserve(d);
    for (const auto& c : b.cols) images.push_back(apply_dense(m, c));
    const DenseMatrix r = restrict_to(b.cols, images);
    int found = 0;
    for (const auto& lambda : candidate_eigenvalues(r)) {
      DenseMatrix shifted = r;
      for (int i = 0; i < d; ++i) shifted[i][i] -= lambda;
      const auto kernel = kernel_basis(shifted);
      if (kernel.empty()) continue;
      Block nb{b.eigenvalues, {}};
      nb.eigenvalues.push_back(lambda);
      for (const auto& k : kernel) {
        Column v(b.cols.front().size());
        for (int j = 0; j < d; ++j) {
          if (k[j] == 0) continue;
          for (std::size_t t = 0; t < v.size(); ++t) v[t] += k[j] * b.cols[j][t];
        }
        nb.cols.push_back(std::move(v));
      }
      found += static_cast<int>(kernel.size());
      out.push_back(std::move(nb));
    }
    if (found != d) {
      std::ostringstream os;
      os << "operator " << op_index << " is not diagonalizable over Q on the block " << describe(b.eigenvalues)
         << " of dimension " << d << ": rational eigenvectors span only " << found;
      throw WeightDecompositionError(os.str());
    }
  }
  return out;
}

std::vector<DenseMatrix> dense_operators(const fock::FockSpace& space, int n, const std::vector<OpExpr>& ops) {
  std::vector<DenseMatrix> out;
  for (const auto& op : ops) {
    if (op.weight() != 0 || op.external() != 0) {
      throw WeightDecompositionError("Cartan operators must preserve the level and have no open slots");
    }
    out.push_back(fock::dense(space, matrix_of(space, op, n)));
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      if (dense_product(out[a], out[b]) != dense_product(out[b], out[a])) {
        std::ostringstream os;
        os << "Cartan operators " << a << " and " << b << " do not commute";
        throw WeightDecompositionError(os.str());
      }
    }
  }
  return out;
}

DenseMatrix as_rows(const std::vector<Column>& cols) { return cols; }

}  // namespace

DenseMatrix dense_identity(int size) {
  DenseMatrix out(size, Column(size));
  for (int i = 0; i < size; ++i) out[i][i] = 1;
  return out;
}

DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b.front().size();
  DenseMatrix out(rows, Column(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

int dense_rank(DenseMatrix a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  return static_cast<int>(row_reduce(a, cols).size());
}

std::vector<std::vector<Rational>> kernel_basis(DenseMatrix a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  const auto pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<WeightBlock> weight_decomposition(const fock::FockSpace& space, int n,
                                              const std::vector<OpExpr>& cartan) {
  const auto mats = dense_operators(space, n, cartan);
  const int dim = space.basis(n)->size();
  std::vector<Block> blocks{{{}, dense_identity(dim)}};
  for (std::size_t k = 0; k < mats.size(); ++k) blocks = split(blocks, mats[k], static_cast<int>(k));
  std::vector<WeightBlock> out;
  for (auto& b : blocks) out.push_back({std::move(b.eigenvalues), as_rows(b.cols)});
  return out;
}

std::vector<RefinedBlock> refined_decomposition(const fock::FockSpace& space, int n,
                                                const std::vector<OpExpr>& cartan) {
  std::vector<OpExpr> ops{op_h_tilde(space.ring(), n)};
  ops.insert(ops.end(), cartan.begin(), cartan.end());
  const auto mats = dense_operators(space, n, ops);
  const auto table = space.basis(n);
  const int dim = table->size();
  std::map<int, Block> by_codim;
  for (int j = 0; j < dim; ++j) {
    const int i = fock::FockSpace::codim_of(table->keys[j]);
    Column v(dim);
    v[j] = 1;
    auto& b = by_codim[i];
    if (b.eigenvalues.empty()) b.eigenvalues.push_back(i);
    b.cols.push_back(std::move(v));
  }
  std::vector<Block> blocks;
  for (auto& [i, b] : by_codim) blocks.push_back(std::move(b));
  for (std::size_t k = 0; k < mats.size(); ++k) blocks = split(blocks, mats[k], static_cast<int>(k));
  std::vector<RefinedBlock> out;
  for (auto& b : blocks) {
    RefinedBlock rb;
    rb.weight.i = static_cast<int>(b.eigenvalues[0].get_num().get_si());
    rb.weight.s = b.eigenvalues[0] - b.eigenvalues[1];
    rb.weight.mu.assign(b.eigenvalues.begin() + 2, b.eigenvalues.end());
    rb.basis = as_rows(b.cols);
    out.push_back(std::move(rb));
  }
  std::sort(out.begin(), out.end(), [](const RefinedBlock& a, const RefinedBlock& b) {
    if (a.weight.i != b.weight.i) return a.weight.i < b.weight.i;
    if (a.weight.s != b.weight.s) return a.weight.s < b.weight.s;
    return a.weight.mu < b.weight.mu;
  });
  return out;
}

}  // namespace k3fock::ops
