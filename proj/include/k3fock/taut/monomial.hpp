#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace k3fock::taut {

/// Per-index label of an unmatched factor: the unit, a divisor from the
/// lattice basis, or the Beauville-Voisin point class c.
struct Label {
  enum class Kind : std::int8_t { kOne, kPoint, kDiv };

  Kind kind = Kind::kOne;
  int div = 0;  // basis index, meaningful for kDiv only

  static constexpr Label one() { return {}; }
  static constexpr Label point() { return {Kind::kPoint, 0}; }
  static constexpr Label divisor(int j) { return {Kind::kDiv, j}; }

  constexpr int codim() const {
    switch (kind) {
      case Kind::kOne: return 0;
      case Kind::kDiv: return 1;
      case Kind::kPoint: return 2;
    }
    return 0;
  }
  /// Rank used by the canonical ordering: One < divisors < c.
  constexpr int rank() const {
    switch (kind) {
      case Kind::kOne: return 0;
      case Kind::kDiv: return 1 + div;
      case Kind::kPoint: return 1 << 20;
    }
    return 0;
  }
  friend constexpr bool operator==(const Label&, const Label&) = default;
};

/// Canonical monomial of R*(S^k): a set of disjoint diagonal pairs plus a
/// label on every unmatched index. Matched indices are bare.
///
/// Indices are 0-based in code and 1-based in the text format.
class Monomial {
 public:
  static constexpr int kMaxArity = 28;

  Monomial() = default;
  explicit Monomial(int arity);

  int arity() const { return arity_; }

  bool matched(int i) const { return cell_[i] < 0; }
  int partner(int i) const { return -1 - cell_[i]; }
  Label label(int i) const;

  /// Both indices must be unmatched; their labels are discarded.
  void match(int i, int j);
  /// Removes the pair through i; both ends become bare (label One).
  void unmatch(int i);
  /// i must be unmatched.
  void set_label(int i, Label l);

  int codim() const;
  int pair_count() const;
  bool is_point_top() const;  // every index carries c

  /// Sorted (i < j) pairs, sorted lexicographically.
  std::vector<std::pair<int, int>> matching() const;
  /// (index, label) for every unmatched index with a label other than One.
  std::vector<std::pair<int, Label>> labels() const;

  /// Relabels indices: index i of *this becomes index map[i] of the result,
  /// which has the given arity. Unmapped result indices are bare.
  Monomial relabeled(const std::vector<int>& map, int new_arity) const;

  /// Raw storage order used as associative-container key.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  // cell >= 0: label code (0 One, 1 c, 2 + j divisor j); cell < 0: -1 - partner.
  std::uint8_t arity_ = 0;
  std::array<std::int8_t, kMaxArity> cell_{};
};

/// Deterministic presentation order: lexicographic on the sorted pair list,
/// then on the sorted (index, label rank) list.
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace k3fock::taut
