#include "k3fock/fock/matrix.hpp"

#include <stdexcept>

namespace k3fock::fock {

bool Matrix::is_zero() const {
  for (const auto& c : columns) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<int> Matrix::first_difference(const Matrix& o) const {
  if (source_n != o.source_n || cols() != o.cols()) return 0;
  for (int j = 0; j < cols(); ++j) {
    if (columns[j].terms() != o.columns[j].terms()) return j;
  }
  if (!is_zero() && (target_n != o.target_n || slots != o.slots)) return 0;
  return std::nullopt;
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.source_n != b.source_n || a.target_n != b.target_n || a.slots != b.slots) {
    throw std::invalid_argument("matrices of different shape");
  }
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(*this, o);
  for (int j = 0; j < cols(); ++j) columns[j] += o.columns[j];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same_shape(*this, o);
  for (int j = 0; j < cols(); ++j) columns[j] -= o.columns[j];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& c : columns) c *= s;
  return *this;
}

Matrix zero_matrix(const FockSpace& space, int source_n, int target_n, int slots) {
  Matrix m;
  m.source_n = source_n;
  m.target_n = target_n;
  m.slots = slots;
  m.source = space.basis(source_n);
  m.columns.assign(m.source->size(), FockVector(target_n, slots));
  return m;
}

Matrix identity_matrix(const FockSpace& space, int n) {
  Matrix m = zero_matrix(space, n, n);
  for (int j = 0; j < m.cols(); ++j) m.columns[j] = FockVector::unit(m.source->keys[j]);
  return m;
}

Matrix matrix_of(const FockSpace& space, const Operator& op, int n) {
  const Operator live = op.pruned(n);
  Matrix m = zero_matrix(space, n, n + op.weight(), op.external());
  const int cols = m.cols();
  const auto& ring = space.ring();
  if (m.target_n < 0) return m;
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < cols; ++j) {
    m.columns[j] = live.apply(ring, FockVector::unit(m.source->keys[j]));
  }
  return m;
}

Matrix matrix_of_serial(const FockSpace& space, const Operator& op, int n) {
  const Operator live = op.pruned(n);
  Matrix m = zero_matrix(space, n, n + op.weight(), op.external());
  if (m.target_n < 0) return m;
  for (int j = 0; j < m.cols(); ++j) {
    m.columns[j] = live.apply(space.ring(), FockVector::unit(m.source->keys[j]));
  }
  return m;
}

FockVector apply(const Matrix& m, const FockVector& v) {
  if (v.slots() != 0 || (!v.is_zero() && v.n() != m.source_n)) {
    throw std::invalid_argument("vector does not live on the matrix source");
  }
  FockVector out(m.target_n, m.slots);
  for (const auto& [key, c] : v.terms()) {
    const int j = m.source->find(key);
    if (j < 0) throw std::invalid_argument("vector term outside the basis: " + to_string(key));
    out += c * m.columns[j];
  }
  return out;
}

Matrix compose(const Matrix& a, const Matrix& b) {
  if (b.slots != 0) throw std::invalid_argument("compose: inner matrix has open slots");
  if (b.target_n != a.source_n) throw std::invalid_argument("compose: level mismatch");
  Matrix out;
  out.source_n = b.source_n;
  out.target_n = a.target_n;
  out.slots = a.slots;
  out.source = b.source;
  out.columns.reserve(b.cols());
  for (const auto& col : b.columns) out.columns.push_back(apply(a, col));
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return compose(a, b) - compose(b, a); }

std::vector<std::vector<Rational>> dense(const FockSpace& space, const Matrix& m) {
  if (m.slots != 0) throw std::invalid_argument("dense form needs a matrix without slots");
  const auto rows = space.basis(m.target_n);
  std::vector<std::vector<Rational>> out(rows->size(), std::vector<Rational>(m.cols(), 0));
  for (int j = 0; j < m.cols(); ++j) {
    for (const auto& [key, c] : m.columns[j].terms()) out[rows->find(key)][j] = c;
  }
  return out;
}

}  // namespace k3fock::fock
