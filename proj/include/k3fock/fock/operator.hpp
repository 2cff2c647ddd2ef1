#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3fock/fock/fock_space.hpp"

namespace k3fock::fock {

/// q-word: letters listed left to right, q_{w_0} q_{w_1} ... q_{w_{t-1}}.
using Word = std::vector<int>;

/// Finite sum of terms q_{w_0}...q_{w_{t-1}}(Γ), Γ over S^{t+e}. Index i < t
/// of Γ belongs to letter i; the last e indices are external slots left open
/// (the operator then maps A*(Hilb) to A*(Hilb × S^e)).
///
/// Every term shifts the level by the same amount (the weight), so the
/// operator maps A*(Hilb_n) to A*(Hilb_{n+weight}).
class Operator {
 public:
  /// The zero operator; adopts the shape of whatever is added to it.
  Operator() = default;
  Operator(int weight, int external) : weight_(weight), external_(external), shaped_(true) {}

  static Operator identity();
  /// A single term; the external slot count is cls.arity() - w.size().
  static Operator term(const Word& w, const taut::SurfaceClass& cls);

  int weight() const { return weight_; }
  int external() const { return external_; }
  const std::map<Word, taut::SurfaceClass>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// False only for a default-constructed operator nothing was added to.
  bool shaped() const { return shaped_; }

  /// Words containing q_0 are dropped. Throws "op mixes target weights" if
  /// the word's weight differs from the operator's.
  void add_term(const Word& w, const taut::SurfaceClass& cls);

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Rational& s);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Rational& s, Operator a) { return a *= s; }

  /// a ∘ b by word concatenation. External slots of a come first.
  friend Operator compose(const Operator& a, const Operator& b);

  /// Multiplies gamma onto the external slots and integrates them out.
  Operator contract_external(const taut::TautRing& ring, const taut::SurfaceClass& gamma) const;

  /// Formal transpose: reverse the word, negate letters, sign (-1)^m per
  /// letter q_m, class indices follow their letters. No external slots.
  Operator transposed() const;

  /// Drops words that vanish identically on A*(Hilb_n): reading right to
  /// left, the level may never drop below zero.
  Operator pruned(int n) const;

  /// Applies the operator; the result has v.slots() + external() slots,
  /// with the new external slots appended last.
  FockVector apply(const taut::TautRing& ring, const FockVector& v) const;

  std::string to_string() const;

 private:
  int weight_ = 0;
  int external_ = 0;
  bool shaped_ = false;
  std::map<Word, taut::SurfaceClass> terms_;
};

/// Normal ordering: letters sorted in descending order, class indices
/// permuted with them (external indices untouched).
std::pair<Word, taut::SurfaceClass> normal_ordered(const Word& w, const taut::SurfaceClass& cls);

/// Term q_{w_0}...q_{w_{t-1}}(Γ) applied to a single vector.
FockVector apply_word(const taut::TautRing& ring, const Word& w, const taut::SurfaceClass& cls,
                      const FockVector& v);

}  // namespace k3fock::fock
