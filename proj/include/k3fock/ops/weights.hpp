#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "k3fock/ops/expr.hpp"

namespace k3fock::ops {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Exact dense helpers over Q.
DenseMatrix dense_identity(int size);
DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b);
int dense_rank(DenseMatrix a);
/// Basis of the kernel, one vector per entry.
std::vector<std::vector<Rational>> kernel_basis(DenseMatrix a);

/// Raised when the inputs do not commute or an operator is not
/// diagonalizable over Q on the current block. No eigenvalue is guessed.
class WeightDecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Joint eigenvalue data of a block: codim i, shift s and one eigenvalue
/// per extra Cartan operator.
struct WeightVector {
  int i = 0;
  Rational s;
  std::vector<Rational> mu;
};

struct WeightBlock {
  std::vector<Rational> eigenvalues;  // one per operator, in input order
  DenseMatrix basis;                  // column vectors in the level basis, stored as rows
};

/// Simultaneous eigenspaces of commuting level-preserving operators on
/// level n. Eigenvalue candidates come from a floating-point solver and are
/// accepted only after an exact kernel computation confirms them.
std::vector<WeightBlock> weight_decomposition(const fock::FockSpace& space, int n,
                                              const std::vector<OpExpr>& cartan);

struct RefinedBlock {
  WeightVector weight;
  DenseMatrix basis;
};

/// Splits level n by codimension, then by the eigenvalue i - s of h̃, then by
/// the extra Cartan operators. Sorted by (i, s, μ).
std::vector<RefinedBlock> refined_decomposition(const fock::FockSpace& space, int n,
                                                const std::vector<OpExpr>& cartan = {});

}  // namespace k3fock::ops
