#pragma once

#include <map>
#include <string>
#include <utility>

#include "k3fock/ops/expr.hpp"

namespace k3fock::ops {

/// Index of a vector of the Mukai space V ⊕ U: e = 0, f = 1, lattice
/// divisor j = 2 + j, δ = 2 + rank.
struct MukaiBasis {
  int rank = 1;

  static constexpr int e() { return 0; }
  static constexpr int f() { return 1; }
  int divisor(int j) const { return 2 + j; }
  int delta() const { return 2 + rank; }
  int size() const { return 3 + rank; }
  bool is_divisor(int v) const { return v >= 2 && v < 2 + rank; }
  std::string name(int v) const;
};

/// Pairing on V ⊕ U at level n: the lattice on divisors, (δ,δ) = 2 - 2n,
/// (e,f) = 1, all other basis pairs zero.
class MukaiForm {
 public:
  MukaiForm(const taut::DivisorLattice& lattice, int n);

  const MukaiBasis& basis() const { return basis_; }
  int n() const { return n_; }
  Rational operator()(int a, int b) const;

 private:
  taut::DivisorLattice lattice_;
  MukaiBasis basis_;
  int n_;
};

/// Element of ∧²(V ⊕ U): coefficients on a∧b with a < b.
class GnsElement {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  GnsElement() = default;
  /// a∧b, normalized to a < b with the sign; zero when a == b.
  static GnsElement wedge(int a, int b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GnsElement& operator+=(const GnsElement& o);
  GnsElement& operator-=(const GnsElement& o);
  GnsElement& operator*=(const Rational& s);
  friend GnsElement operator+(GnsElement a, const GnsElement& b) { return a += b; }
  friend GnsElement operator-(GnsElement a, const GnsElement& b) { return a -= b; }
  friend GnsElement operator*(const Rational& s, GnsElement a) { return a *= s; }
  friend bool operator==(const GnsElement&, const GnsElement&) = default;

  std::string to_string(const MukaiBasis& basis) const;

 private:
  void add(int a, int b, const Rational& coef);
  Terms terms_;
};

/// [a∧b, c∧d] = (a,d) b∧c - (a,c) b∧d - (b,d) a∧c + (b,c) a∧d, extended bilinearly.
GnsElement gns_bracket(const MukaiForm& form, const GnsElement& x, const GnsElement& y);

/// The operator by which x acts on level n:
///   e∧f -> h, e∧α -> e_α, e∧δ -> e_δ, α∧f -> f_α, δ∧f -> f_δ,
///   α∧β -> h_αβ, α∧δ -> h_αδ.
/// Every wedge type of V ⊕ U is covered, so no element is rejected.
OpExpr op_act(const taut::TautRing& ring, const GnsElement& x, int n);

}  // namespace k3fock::ops
