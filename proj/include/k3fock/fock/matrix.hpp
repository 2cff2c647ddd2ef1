#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "k3fock/fock/fock_space.hpp"
#include "k3fock/fock/operator.hpp"

namespace k3fock::fock {

/// Exact matrix of an operator A*(Hilb_source_n) -> A*(Hilb_target_n × S^slots).
/// Column j is the image of basis vector j of the source level, kept sparse.
struct Matrix {
  int source_n = 0;
  int target_n = 0;
  int slots = 0;
  std::shared_ptr<const BasisTable> source;
  std::vector<FockVector> columns;

  int cols() const { return static_cast<int>(columns.size()); }
  bool is_zero() const;
  /// First column where the two matrices differ.
  std::optional<int> first_difference(const Matrix& o) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) { return !a.first_difference(b); }
};

Matrix identity_matrix(const FockSpace& space, int n);
Matrix zero_matrix(const FockSpace& space, int source_n, int target_n, int slots = 0);

/// Columns evaluated in parallel with OpenMP.
Matrix matrix_of(const FockSpace& space, const Operator& op, int n);
/// Single-threaded reference evaluation; must agree with matrix_of exactly.
Matrix matrix_of_serial(const FockSpace& space, const Operator& op, int n);

/// a ∘ b. b must have no open slots and land on a's source level.
Matrix compose(const Matrix& a, const Matrix& b);
/// a∘b - b∘a for endomorphisms of one level.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Applies the matrix to an arbitrary vector of its source level.
FockVector apply(const Matrix& m, const FockVector& v);

/// Dense rows x columns form, rows indexed by basis(target_n). No slots.
std::vector<std::vector<Rational>> dense(const FockSpace& space, const Matrix& m);

}  // namespace k3fock::fock
