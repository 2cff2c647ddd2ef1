#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "k3fock/fock/partition.hpp"
#include "k3fock/rational.hpp"
#include "k3fock/taut/ring.hpp"

namespace k3fock::fock {

/// Label of a vector q_λ(Γ)·v: the first l(λ) indices of Γ are attached to
/// the parts of λ in order, any further indices are open S-slots.
struct BasisKey {
  Partition lambda;
  taut::Monomial gamma;

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// Representative of the Aut(λ)-orbit of m, permuting only the indices
/// attached to equal parts. q_λ(Γ) only depends on this orbit.
taut::Monomial canonical_gamma(const Partition& lambda, const taut::Monomial& m);

std::string to_string(const BasisKey& key);

/// Element of A*(Hilb_n × S^slots) in the tautological Nakajima model.
/// Also used with slots == 0 for plain Fock vectors.
class FockVector {
 public:
  using Terms = std::map<BasisKey, Rational>;

  explicit FockVector(int n = 0, int slots = 0) : n_(n), slots_(slots) {}
  static FockVector vacuum() { return FockVector::unit(BasisKey{{}, taut::Monomial(0)}, 0); }
  /// The single vector q_λ(m)v with coefficient 1.
  static FockVector unit(const BasisKey& key, int slots = 0);

  int n() const { return n_; }
  int slots() const { return slots_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coef·q_λ(m); m need not be in orbit-canonical form.
  void add(const Partition& lambda, const taut::Monomial& m, const Rational& coef);
  void add(const Partition& lambda, const taut::SurfaceClass& gamma, const Rational& coef = 1);
  Rational coefficient(const BasisKey& key) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& s);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& s, FockVector a) { return a *= s; }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.n_ == b.n_ && a.slots_ == b.slots_ && a.terms_ == b.terms_;
  }

  /// e.g. `2*q(2,1)[c_1] - q(3)[1]`; "0" for the zero vector.
  std::string to_string() const;

 private:
  void add_canonical(const BasisKey& key, const Rational& coef);

  int n_;
  int slots_;
  Terms terms_;
};

/// q_k applied to every term: part k is inserted and its index is tied to a
/// new open slot (appended last) by the diagonal. k > 0.
FockVector apply_create(int k, const FockVector& v);

/// q_{-k}: for every part equal to k, coefficient -k, the part is removed
/// and its index becomes a new open slot (appended last). k > 0.
FockVector apply_annihilate(int k, const FockVector& v);

/// Multiplies ext onto the open slots and integrates them out.
FockVector contract_slots(const taut::TautRing& ring, const FockVector& v,
                          const taut::SurfaceClass& ext);

/// Contracts only the last ext.arity() slots; earlier slots stay open.
FockVector contract_trailing_slots(const taut::TautRing& ring, const FockVector& v,
                                   const taut::SurfaceClass& ext);

/// Slot j moves to slot perm[j].
FockVector permute_slots(const FockVector& v, const std::vector<int>& perm);

/// Ordered basis of the model of A*(Hilb_n).
struct BasisTable {
  int n = 0;
  std::vector<BasisKey> keys;
  std::map<BasisKey, int> index;

  int size() const { return static_cast<int>(keys.size()); }
  /// -1 when absent.
  int find(const BasisKey& key) const;
};

/// The Fock model over a fixed divisor lattice. Basis tables are built on
/// first use and shared; all other state is immutable.
class FockSpace {
 public:
  explicit FockSpace(taut::DivisorLattice lattice = {});

  const taut::TautRing& ring() const { return ring_; }
  const taut::DivisorLattice& lattice() const { return ring_.lattice(); }

  /// Basis vectors ordered by partition ((n) first), then by canonical
  /// monomial order of the orbit representative.
  std::shared_ptr<const BasisTable> basis(int n) const;
  FockVector basis_vector(int n, int i) const;

  /// i with q_λ(Γ)v in A^i(Hilb_n); throws for inhomogeneous input.
  static int codim_of(const BasisKey& key);

 private:
  taut::TautRing ring_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const BasisTable>> cache_;
};

/// One line per basis vector: `index<TAB>partition<TAB>class<TAB>codim`.
std::string basis_index_text(const BasisTable& table);

}  // namespace k3fock::fock
