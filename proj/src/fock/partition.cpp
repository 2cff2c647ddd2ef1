#include "k3fock/fock/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace k3fock::fock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

long Partition::s() const {
  long total = 0;
  for (int p : parts_) total += static_cast<long>(p) * p;
  return total;
}

long Partition::aut_order() const {
  long out = 1;
  for (const auto& [b, e] : equal_runs()) {
    for (int t = 2; t <= e - b; ++t) out *= t;
  }
  return out;
}

long Partition::z() const {
  long out = aut_order();
  for (int p : parts_) out *= p;
  return out;
}

int Partition::insert_position(int k) const {
  int pos = 0;
  while (pos < length() && parts_[pos] >= k) ++pos;
  return pos;
}

Partition Partition::with_part(int k) const {
  Partition out = *this;
  out.parts_.insert(out.parts_.begin() + insert_position(k), k);
  return out;
}

Partition Partition::without(int i) const {
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + i);
  return out;
}

std::vector<std::pair<int, int>> Partition::equal_runs() const {
  std::vector<std::pair<int, int>> out;
  int b = 0;
  while (b < length()) {
    int e = b + 1;
    while (e < length() && parts_[e] == parts_[b]) ++e;
    if (e - b >= 2) out.emplace_back(b, e);
    b = e;
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_of(int n, int len) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    if (p.length() == len) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace k3fock::fock
