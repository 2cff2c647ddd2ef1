#pragma once

#include <map>
#include <optional>
#include <vector>

#include "k3fock/rational.hpp"
#include "k3fock/taut/monomial.hpp"

namespace k3fock::taut {

/// Element of R*(S^k) as a finite combination of canonical monomials.
/// Zero coefficients are never stored.
class SurfaceClass {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit SurfaceClass(int arity = 0) : arity_(arity) {}

  static SurfaceClass one(int arity);
  static SurfaceClass from_monomial(const Monomial& m, const Rational& coef = 1);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m, zero when absent.
  Rational coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Rational& coef);

  /// Codimension if every term has the same one; nullopt for zero or mixed.
  std::optional<int> homogeneous_codim() const;

  /// Terms in canonical presentation order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  SurfaceClass& operator+=(const SurfaceClass& o);
  SurfaceClass& operator-=(const SurfaceClass& o);
  SurfaceClass& operator*=(const Rational& s);
  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
  friend SurfaceClass operator-(SurfaceClass a, const SurfaceClass& b) { return a -= b; }
  friend SurfaceClass operator*(SurfaceClass a, const Rational& s) { return a *= s; }
  friend SurfaceClass operator*(const Rational& s, SurfaceClass a) { return a *= s; }
  friend SurfaceClass operator-(SurfaceClass a) { return a *= -1; }
  friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  int arity_;
  Terms terms_;
};

// Structural operations that do not depend on the divisor lattice.

/// p*: index i of `a` becomes index inj[i] of S^m. inj must be injective.
SurfaceClass pullback(const SurfaceClass& a, const std::vector<int>& inj, int m);

/// Push-forward forgetting the listed indices (projection formula rules).
SurfaceClass pushforward(const SurfaceClass& a, const std::vector<int>& forget);

/// Degree of the top-dimensional part, i.e. push-forward to a point.
Rational integrate_all(const SurfaceClass& a);

/// Swaps the first p indices with the last q as blocks.
SurfaceClass transpose(const SurfaceClass& a, int p, int q);

/// Index i of `a` becomes index perm[i].
SurfaceClass permute(const SurfaceClass& a, const std::vector<int>& perm);

/// Averages over all permutations preserving each block setwise.
SurfaceClass symmetrize(const SurfaceClass& a, const std::vector<std::vector<int>>& blocks);

/// Exterior product: a on the first indices, b on the following ones.
SurfaceClass exterior(const SurfaceClass& a, const SurfaceClass& b);

}  // namespace k3fock::taut
