#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "k3fock/fock/matrix.hpp"
#include "k3fock/fock/operator.hpp"

namespace k3fock::ops {

/// Formal operator expression evaluated on the Fock model.
///
/// Leaves are finite sums of q-words (fock::Operator). Inner nodes are
/// rational sums, slot-aware compositions and contractions of open slots.
/// Composition keeps the two factors apart instead of concatenating words,
/// so products of multiplication operators cost one pass per factor.
class OpExpr {
 public:
  /// The zero operator; adopts the shape of whatever is added to it.
  OpExpr();
  OpExpr(fock::Operator words);  // NOLINT: leaves convert implicitly

  static OpExpr identity();

  int weight() const;
  int external() const;
  /// True only for an empty leaf; sums that cancel are not detected.
  bool is_trivially_zero() const;

  friend OpExpr operator+(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator-(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator*(const Rational& s, const OpExpr& a);
  OpExpr& operator+=(const OpExpr& o) { return *this = *this + o; }
  OpExpr& operator-=(const OpExpr& o) { return *this = *this - o; }

  /// a ∘ b; the open slots of a come before those of b.
  friend OpExpr compose(const OpExpr& a, const OpExpr& b);

  /// Multiplies gamma onto the open slots and integrates them out.
  OpExpr contract(const taut::TautRing& ring, const taut::SurfaceClass& gamma) const;

  /// Image of v; open slots of the result are v's slots followed by ours.
  fock::FockVector apply(const taut::TautRing& ring, const fock::FockVector& v) const;

  std::string to_string() const;

 private:
  struct Node;
  explicit OpExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Columns evaluated in parallel with OpenMP.
fock::Matrix matrix_of(const fock::FockSpace& space, const OpExpr& op, int n);
fock::Matrix matrix_of_serial(const fock::FockSpace& space, const OpExpr& op, int n);

/// Every word put in normal order (descending letters), classes permuted.
fock::Operator normal_order(const fock::Operator& op);

/// Drops words whose annihilation letters sum to more than n. Only exact for
/// normally ordered words: those kill A*(Hilb_m) for every m <= n.
fock::Operator truncate(const fock::Operator& op, int n);

/// Multiplies cls onto the open slots of every term (arity == external()).
fock::Operator times_external(const taut::TautRing& ring, const fock::Operator& op,
                              const taut::SurfaceClass& cls);

}  // namespace k3fock::ops
