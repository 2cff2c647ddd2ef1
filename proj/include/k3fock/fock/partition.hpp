#pragma once

#include <compare>
#include <string>
#include <vector>

namespace k3fock::fock {

/// Integer partition with parts in descending order.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws on non-positive parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[i]; }
  int size() const;                     // |λ|
  int length() const { return static_cast<int>(parts_.size()); }  // l(λ)
  long s() const;                       // Σ λ_i²
  long aut_order() const;               // λ! = Π m_i!
  long z() const;                       // |Aut λ| Π λ_i
  bool empty() const { return parts_.empty(); }

  /// Position a new part k would take (after existing parts >= k).
  int insert_position(int k) const;
  Partition with_part(int k) const;
  Partition without(int i) const;

  /// Maximal runs [begin, end) of equal parts of length >= 2.
  std::vector<std::pair<int, int>> equal_runs() const;

  std::string to_string() const;  // "(3,1,1)", "()" for empty

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Partitions of n with exactly `len` parts, in the same order.
std::vector<Partition> partitions_of(int n, int len);

}  // namespace k3fock::fock
