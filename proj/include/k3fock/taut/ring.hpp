#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3fock/rational.hpp"
#include "k3fock/taut/surface_class.hpp"

namespace k3fock::taut {

/// Intersection form on the chosen divisor classes of S.
class DivisorLattice {
 public:
  /// Rank 1 with (α, α) = 2.
  DivisorLattice();
  /// Rejects non-square or asymmetric input.
  explicit DivisorLattice(std::vector<std::vector<Rational>> gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  const Rational& pairing(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  /// Parses "2" or "0 1; 1 0" (rows separated by ';').
  static DivisorLattice parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<std::vector<Rational>> gram_;
};

/// Arithmetic in the Beauville-Voisin tautological ring of the powers of a
/// K3 surface. Products are reduced to canonical monomials with
///
///   α·β = (α,β) c,  α·c = c·c = 0                      (same index)
///   Δ_ij c_i = c_i c_j,  Δ_ij α_i = α_i c_j + α_j c_i
///   Δ_ij Δ_jk = Δ_ijk
///            = Δ_ij c_k + Δ_ik c_j + Δ_jk c_i - c_i c_j - c_i c_k - c_j c_k
///   Δ_ij Δ_ij = 24 c_i c_j
class TautRing {
 public:
  explicit TautRing(DivisorLattice lattice = {});

  const DivisorLattice& lattice() const { return lattice_; }

  SurfaceClass mul(const SurfaceClass& a, const SurfaceClass& b) const;
  SurfaceClass mul_monomials(const Monomial& a, const Monomial& b) const;
  /// Adds coef * a * b into out (arity a == arity b).
  void mul_accumulate(const Monomial& a, const Monomial& b, const Rational& coef,
                      SurfaceClass::Terms& out) const;

  /// ∫ a·b over S for arity-1 classes.
  Rational pairing(const SurfaceClass& a, const SurfaceClass& b) const;

  // Generators on S^k (indices 0-based).
  SurfaceClass point(int k, int i) const;
  SurfaceClass divisor(int k, int i, int j) const;
  SurfaceClass diagonal(int k, int i, int j) const;
  /// Small diagonal {x_i equal for i in idx}; the unit when |idx| <= 1.
  SurfaceClass small_diagonal(int k, const std::vector<int>& idx) const;

  /// Every canonical monomial of arity k, in canonical order.
  std::vector<Monomial> canonical_basis(int k) const;

  /// Parses the text format; products are reduced to canonical form.
  SurfaceClass parse(std::string_view text, int arity) const;

 private:
  DivisorLattice lattice_;
};

/// Text format, e.g. `3/2*D(1,2)*c_3 - a1_2*c_1` (1-based indices).
std::string to_string(const SurfaceClass& a);
std::string to_string(const Monomial& m);

}  // namespace k3fock::taut
