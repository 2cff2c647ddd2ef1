#include "k3fock/fock/operator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3fock::fock {

using taut::Monomial;
using taut::SurfaceClass;

namespace {

int word_weight(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace

Operator Operator::identity() {
  Operator out(0, 0);
  out.add_term({}, SurfaceClass::one(0));
  return out;
}

Operator Operator::term(const Word& w, const SurfaceClass& cls) {
  const int e = cls.arity() - static_cast<int>(w.size());
  if (e < 0) throw std::invalid_argument("class arity is smaller than the word length");
  Operator out(word_weight(w), e);
  out.add_term(w, cls);
  return out;
}

void Operator::add_term(const Word& w, const SurfaceClass& cls) {
  const int e = cls.arity() - static_cast<int>(w.size());
  if (!shaped_) {
    weight_ = word_weight(w);
    external_ = e;
    shaped_ = true;
  }
  if (word_weight(w) != weight_) throw std::invalid_argument("op mixes target weights");
  if (e != external_) throw std::invalid_argument("op mixes external slot counts");
  if (cls.is_zero() || std::find(w.begin(), w.end(), 0) != w.end()) return;
  auto [it, inserted] = terms_.try_emplace(w, cls);
  if (!inserted) {
    it->second += cls;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Operator& Operator::operator+=(const Operator& o) {
  if (!o.shaped_) return *this;
  if (!shaped_) {
    weight_ = o.weight_;
    external_ = o.external_;
    shaped_ = true;
  }
  if (o.weight_ != weight_) throw std::invalid_argument("op mixes target weights");
  if (o.external_ != external_) throw std::invalid_argument("op mixes external slot counts");
  for (const auto& [w, cls] : o.terms_) add_term(w, cls);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  Operator neg = o;
  neg *= -1;
  return *this += neg;
}

Operator& Operator::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, cls] : terms_) cls *= s;
  return *this;
}

Operator compose(const Operator& a, const Operator& b) {
  Operator out(a.weight_ + b.weight_, a.external_ + b.external_);
  for (const auto& [wa, ca] : a.terms_) {
    const int ta = static_cast<int>(wa.size());
    for (const auto& [wb, cb] : b.terms_) {
      const int tb = static_cast<int>(wb.size());
      const int arity = ta + tb + a.external_ + b.external_;
      // Letters of a, letters of b, externals of a, externals of b.
      std::vector<int> ma(ta + a.external_);
      for (int i = 0; i < ta; ++i) ma[i] = i;
      for (int j = 0; j < a.external_; ++j) ma[ta + j] = ta + tb + j;
      std::vector<int> mb(tb + b.external_);
      for (int i = 0; i < tb; ++i) mb[i] = ta + i;
      for (int j = 0; j < b.external_; ++j) mb[tb + j] = ta + tb + a.external_ + j;
      const SurfaceClass pa = pullback(ca, ma, arity);
      const SurfaceClass pb = pullback(cb, mb, arity);
      // The two classes live on disjoint indices; their product is the
      // exterior product after relabeling.
      SurfaceClass prod(arity);
      for (const auto& [x, cx] : pa.terms()) {
        for (const auto& [y, cy] : pb.terms()) {
          Monomial m = x;
          for (int i = 0; i < arity; ++i) {
            if (y.matched(i)) {
              if (y.partner(i) > i) m.match(i, y.partner(i));
            } else if (y.label(i).kind != taut::Label::Kind::kOne) {
              m.set_label(i, y.label(i));
            }
          }
          prod.add(m, cx * cy);
        }
      }
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, prod);
    }
  }
  return out;
}

Operator Operator::contract_external(const taut::TautRing& ring, const SurfaceClass& gamma) const {
  if (gamma.arity() != external_) throw std::invalid_argument("contraction class arity differs from external slots");
  Operator out(weight_, 0);
  for (const auto& [w, cls] : terms_) {
    const int t = static_cast<int>(w.size());
    std::vector<int> map(external_);
    std::iota(map.begin(), map.end(), t);
    const SurfaceClass prod = ring.mul(cls, pullback(gamma, map, t + external_));
    out.add_term(w, pushforward(prod, map));
  }
  return out;
}

Operator Operator::transposed() const {
  if (external_ != 0) throw std::invalid_argument("transpose needs an operator without external slots");
  Operator out(-weight_, 0);
  for (const auto& [w, cls] : terms_) {
    const int t = static_cast<int>(w.size());
    Word tw(t);
    std::vector<int> perm(t);
    int sign = 1;
    for (int i = 0; i < t; ++i) {
      tw[t - 1 - i] = -w[i];
      perm[i] = t - 1 - i;
      if (w[i] % 2 != 0) sign = -sign;
    }
    out.add_term(tw, permute(cls, perm) * Rational(sign));
  }
  return out;
}

Operator Operator::pruned(int n) const {
  Operator out(weight_, external_);
  for (const auto& [w, cls] : terms_) {
    int level = n;
    bool alive = true;
    for (auto it = w.rbegin(); it != w.rend() && alive; ++it) {
      level += *it;
      alive = level >= 0;
    }
    if (alive) out.add_term(w, cls);
  }
  return out;
}

FockVector apply_word(const taut::TautRing& ring, const Word& w, const SurfaceClass& cls,
                      const FockVector& v) {
  const int t = static_cast<int>(w.size());
  const int e = cls.arity() - t;
  const int s0 = v.slots();
  FockVector cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    cur = *it > 0 ? apply_create(*it, cur) : apply_annihilate(-*it, cur);
    if (cur.is_zero()) return FockVector(v.n() + std::accumulate(w.begin(), w.end(), 0), s0 + e);
  }
  FockVector out(cur.n(), s0 + e);
  std::map<int, SurfaceClass> pulled;  // by l(λ)
  for (const auto& [key, c] : cur.terms()) {
    const int l = key.lambda.length();
    const int base = l + s0;
    const int arity = base + t + e;
    auto it = pulled.find(l);
    if (it == pulled.end()) {
      std::vector<int> map(t + e);
      for (int i = 0; i < t; ++i) map[i] = base + (t - 1 - i);
      for (int j = 0; j < e; ++j) map[t + j] = base + t + j;
      it = pulled.emplace(l, pullback(cls, map, arity)).first;
    }
    std::vector<int> ident(base + t);
    std::iota(ident.begin(), ident.end(), 0);
    const Monomial m = key.gamma.relabeled(ident, arity);
    SurfaceClass::Terms acc;
    for (const auto& [g, gc] : it->second.terms()) ring.mul_accumulate(m, g, c * gc, acc);
    SurfaceClass prod(arity);
    for (const auto& [x, xc] : acc) prod.add(x, xc);
    std::vector<int> forget(t);
    std::iota(forget.begin(), forget.end(), base);
    out.add(key.lambda, pushforward(prod, forget));
  }
  return out;
}

FockVector Operator::apply(const taut::TautRing& ring, const FockVector& v) const {
  FockVector out(v.n() + weight_, v.slots() + external_);
  if (out.n() < 0) return out;
  for (const auto& [w, cls] : terms_) out += apply_word(ring, w, cls, v);
  return out;
}

std::pair<Word, SurfaceClass> normal_ordered(const Word& w, const SurfaceClass& cls) {
  const int t = static_cast<int>(w.size());
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  Word sorted(t);
  std::vector<int> perm(cls.arity());
  std::iota(perm.begin(), perm.end(), 0);
  for (int pos = 0; pos < t; ++pos) {
    sorted[pos] = w[order[pos]];
    perm[order[pos]] = pos;
  }
  return {sorted, permute(cls, perm)};
}

std::string Operator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, cls] : terms_) {
    if (!out.empty()) out += " + ";
    out += "q[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
    out += "](" + taut::to_string(cls) + ")";
  }
  return out;
}

}  // namespace k3fock::fock
