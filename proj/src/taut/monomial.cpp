#include "k3fock/taut/monomial.hpp"

#include <stdexcept>
#include <tuple>

namespace k3fock::taut {
namespace {

std::int8_t encode(Label l) {
  switch (l.kind) {
    case Label::Kind::kOne: return 0;
    case Label::Kind::kPoint: return 1;
    case Label::Kind::kDiv: return static_cast<std::int8_t>(2 + l.div);
  }
  return 0;
}

}  // namespace

Monomial::Monomial(int arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw std::out_of_range("monomial arity out of range");
  }
  arity_ = static_cast<std::uint8_t>(arity);
}

Label Monomial::label(int i) const {
  const std::int8_t c = cell_[i];
  if (c <= 0) return Label::one();
  if (c == 1) return Label::point();
  return Label::divisor(c - 2);
}

void Monomial::match(int i, int j) {
  cell_[i] = static_cast<std::int8_t>(-1 - j);
  cell_[j] = static_cast<std::int8_t>(-1 - i);
}

void Monomial::unmatch(int i) {
  const int j = partner(i);
  cell_[i] = 0;
  cell_[j] = 0;
}

void Monomial::set_label(int i, Label l) { cell_[i] = encode(l); }

int Monomial::codim() const {
  int total = 0;
  for (int i = 0; i < arity_; ++i) {
    total += matched(i) ? 1 : label(i).codim();
  }
  return total;
}

int Monomial::pair_count() const {
  int count = 0;
  for (int i = 0; i < arity_; ++i) count += matched(i) ? 1 : 0;
  return count / 2;
}

bool Monomial::is_point_top() const {
  for (int i = 0; i < arity_; ++i) {
    if (cell_[i] != 1) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Monomial::matching() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < arity_; ++i) {
    if (matched(i) && partner(i) > i) out.emplace_back(i, partner(i));
  }
  return out;
}

std::vector<std::pair<int, Label>> Monomial::labels() const {
  std::vector<std::pair<int, Label>> out;
  for (int i = 0; i < arity_; ++i) {
    if (cell_[i] > 0) out.emplace_back(i, label(i));
  }
  return out;
}

Monomial Monomial::relabeled(const std::vector<int>& map, int new_arity) const {
  Monomial out(new_arity);
  for (int i = 0; i < arity_; ++i) {
    if (matched(i)) {
      const int j = partner(i);
      if (j > i) out.match(map[i], map[j]);
    } else {
      out.cell_[map[i]] = cell_[i];
    }
  }
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  const auto ma = a.matching();
  const auto mb = b.matching();
  if (ma != mb) return ma < mb;
  const auto la = a.labels();
  const auto lb = b.labels();
  const auto key = [](const std::vector<std::pair<int, Label>>& v) {
    std::vector<std::pair<int, int>> out;
    out.reserve(v.size());
    for (const auto& [i, l] : v) out.emplace_back(i, l.rank());
    return out;
  };
  return key(la) < key(lb);
}

}  // namespace k3fock::taut
