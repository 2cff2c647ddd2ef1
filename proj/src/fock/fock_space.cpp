#include "k3fock/fock/fock_space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "k3fock/faults.hpp"

namespace k3fock::fock {

using taut::Monomial;
using taut::SurfaceClass;

Monomial canonical_gamma(const Partition& lambda, const Monomial& m) {
  const auto runs = lambda.equal_runs();
  if (runs.empty()) return m;
  std::vector<int> map(m.arity());
  std::iota(map.begin(), map.end(), 0);
  Monomial best = m;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      const Monomial cand = m.relabeled(map, m.arity());
      if (cand < best) best = cand;
      return;
    }
    const auto [b, e] = runs[r];
    do {
      rec(r + 1);
    } while (std::next_permutation(map.begin() + b, map.begin() + e));
  };
  rec(0);
  return best;
}

std::string to_string(const BasisKey& key) {
  if (key.lambda.empty() && key.gamma.arity() == 0) return "v";
  return "q" + key.lambda.to_string() + "[" + taut::to_string(key.gamma) + "]";
}

FockVector FockVector::unit(const BasisKey& key, int slots) {
  FockVector out(key.lambda.size(), slots);
  out.add(key.lambda, key.gamma, 1);
  return out;
}

void FockVector::add_canonical(const BasisKey& key, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void FockVector::add(const Partition& lambda, const Monomial& m, const Rational& coef) {
  if (lambda.size() != n_ || m.arity() != lambda.length() + slots_) {
    throw std::invalid_argument("Fock vector term does not match level or slot count");
  }
  add_canonical(BasisKey{lambda, canonical_gamma(lambda, m)}, coef);
}

void FockVector::add(const Partition& lambda, const SurfaceClass& gamma, const Rational& coef) {
  for (const auto& [m, c] : gamma.terms()) add(lambda, m, c * coef);
}

Rational FockVector::coefficient(const BasisKey& key) const {
  const auto it = terms_.find(BasisKey{key.lambda, canonical_gamma(key.lambda, key.gamma)});
  return it == terms_.end() ? Rational(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && terms_.empty()) {
    n_ = o.n_;
    slots_ = o.slots_;
  }
  if (o.n_ != n_ || o.slots_ != slots_) throw std::invalid_argument("adding Fock vectors of different shape");
  for (const auto& [k, c] : o.terms_) add_canonical(k, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  FockVector neg = o;
  neg *= -1;
  return *this += neg;
}

FockVector& FockVector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    out += fock::to_string(k);
  }
  return out;
}

FockVector apply_create(int k, const FockVector& v) {
  if (k <= 0) throw std::invalid_argument("creation index must be positive");
  FockVector out(v.n() + k, v.slots() + 1);
  for (const auto& [key, c] : v.terms()) {
    const int l = key.lambda.length();
    const int s = v.slots();
    const int pos = key.lambda.insert_position(k);
    std::vector<int> map(l + s);
    for (int i = 0; i < l; ++i) map[i] = i < pos ? i : i + 1;
    for (int j = 0; j < s; ++j) map[l + j] = l + 1 + j;
    Monomial m = key.gamma.relabeled(map, l + s + 2);
    m.match(pos, l + 1 + s);
    out.add(key.lambda.with_part(k), m, c);
  }
  return out;
}

FockVector apply_annihilate(int k, const FockVector& v) {
  if (k <= 0) throw std::invalid_argument("annihilation index must be positive");
  FockVector out(v.n() - k, v.slots() + 1);
  if (v.n() < k) return out;
  const Rational weight = fault_active(Fault::kAnnihilationSign) ? Rational(k) : Rational(-k);
  for (const auto& [key, c] : v.terms()) {
    const int l = key.lambda.length();
    const int s = v.slots();
    for (int i = 0; i < l; ++i) {
      if (key.lambda[i] != k) continue;
      std::vector<int> map(l + s);
      for (int j = 0; j < l; ++j) map[j] = j < i ? j : j - 1;
      map[i] = l - 1 + s;
      for (int t = 0; t < s; ++t) map[l + t] = l - 1 + t;
      out.add(key.lambda.without(i), key.gamma.relabeled(map, l + s), c * weight);
    }
  }
  return out;
}

FockVector contract_slots(const taut::TautRing& ring, const FockVector& v, const SurfaceClass& ext) {
  if (ext.arity() != v.slots()) throw std::invalid_argument("contraction class arity differs from slot count");
  FockVector out(v.n(), 0);
  const int s = v.slots();
  for (const auto& [key, c] : v.terms()) {
    const int l = key.lambda.length();
    std::vector<int> map(s);
    std::iota(map.begin(), map.end(), l);
    const SurfaceClass pulled = pullback(ext, map, l + s);
    SurfaceClass prod(l + s);
    SurfaceClass::Terms acc;
    for (const auto& [m, e] : pulled.terms()) ring.mul_accumulate(key.gamma, m, c * e, acc);
    for (const auto& [m, e] : acc) prod.add(m, e);
    std::vector<int> forget(s);
    std::iota(forget.begin(), forget.end(), l);
    out.add(key.lambda, pushforward(prod, forget));
  }
  return out;
}

FockVector contract_trailing_slots(const taut::TautRing& ring, const FockVector& v,
                                   const SurfaceClass& ext) {
  const int e = ext.arity();
  const int s = v.slots();
  if (e > s) throw std::invalid_argument("contraction class arity exceeds slot count");
  FockVector out(v.n(), s - e);
  for (const auto& [key, c] : v.terms()) {
    const int l = key.lambda.length();
    std::vector<int> map(e);
    std::iota(map.begin(), map.end(), l + s - e);
    const SurfaceClass pulled = pullback(ext, map, l + s);
    SurfaceClass::Terms acc;
    for (const auto& [m, x] : pulled.terms()) ring.mul_accumulate(key.gamma, m, c * x, acc);
    SurfaceClass prod(l + s);
    for (const auto& [m, x] : acc) prod.add(m, x);
    out.add(key.lambda, pushforward(prod, map));
  }
  return out;
}

FockVector permute_slots(const FockVector& v, const std::vector<int>& perm) {
  const int s = v.slots();
  if (static_cast<int>(perm.size()) != s) throw std::invalid_argument("slot permutation has wrong size");
  FockVector out(v.n(), s);
  for (const auto& [key, c] : v.terms()) {
    const int l = key.lambda.length();
    std::vector<int> map(l + s);
    std::iota(map.begin(), map.begin() + l, 0);
    for (int j = 0; j < s; ++j) map[l + j] = l + perm[j];
    out.add(key.lambda, key.gamma.relabeled(map, l + s), c);
  }
  return out;
}

int BasisTable::find(const BasisKey& key) const {
  const auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

FockSpace::FockSpace(taut::DivisorLattice lattice) : ring_(std::move(lattice)) {}

std::shared_ptr<const BasisTable> FockSpace::basis(int n) const {
  if (n < 0) throw std::invalid_argument("negative level");
  {
    std::lock_guard lock(mutex_);
    const auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  auto table = std::make_shared<BasisTable>();
  table->n = n;
  std::map<int, std::vector<Monomial>> by_length;
  for (const auto& lambda : partitions_of(n)) {
    const int l = lambda.length();
    auto& mons = by_length[l];
    if (mons.empty()) mons = ring_.canonical_basis(l);
    std::set<Monomial> reps;
    for (const auto& m : mons) reps.insert(canonical_gamma(lambda, m));
    std::vector<Monomial> sorted(reps.begin(), reps.end());
    std::sort(sorted.begin(), sorted.end(), taut::canonical_less);
    for (const auto& m : sorted) {
      table->index.emplace(BasisKey{lambda, m}, table->size());
      table->keys.push_back(BasisKey{lambda, m});
    }
  }
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(n, std::move(table)).first->second;
}

FockVector FockSpace::basis_vector(int n, int i) const {
  return FockVector::unit(basis(n)->keys.at(i));
}

int FockSpace::codim_of(const BasisKey& key) {
  return key.lambda.size() - key.lambda.length() + key.gamma.codim();
}

std::string basis_index_text(const BasisTable& table) {
  std::string out;
  for (int i = 0; i < table.size(); ++i) {
    const auto& k = table.keys[i];
    out += std::to_string(i) + "\t" + k.lambda.to_string() + "\t" + taut::to_string(k.gamma) + "\t" +
           std::to_string(FockSpace::codim_of(k)) + "\n";
  }
  return out;
}

}  // namespace k3fock::fock
