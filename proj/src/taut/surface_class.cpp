#include "k3fock/taut/surface_class.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3fock::taut {

SurfaceClass SurfaceClass::one(int arity) {
  SurfaceClass out(arity);
  out.add(Monomial(arity), 1);
  return out;
}

SurfaceClass SurfaceClass::from_monomial(const Monomial& m, const Rational& coef) {
  SurfaceClass out(m.arity());
  out.add(m, coef);
  return out;
}

Rational SurfaceClass::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SurfaceClass::add(const Monomial& m, const Rational& coef) {
  if (coef == 0) return;
  if (m.arity() != arity_) throw std::invalid_argument("surface class arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> SurfaceClass::homogeneous_codim() const {
  std::optional<int> codim;
  for (const auto& [m, c] : terms_) {
    const int d = m.codim();
    if (codim && *codim != d) return std::nullopt;
    codim = d;
  }
  return codim;
}

std::vector<std::pair<Monomial, Rational>> SurfaceClass::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

SurfaceClass& SurfaceClass::operator+=(const SurfaceClass& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("surface class arity mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SurfaceClass& SurfaceClass::operator-=(const SurfaceClass& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("surface class arity mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SurfaceClass& SurfaceClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SurfaceClass pullback(const SurfaceClass& a, const std::vector<int>& inj, int m) {
  if (static_cast<int>(inj.size()) != a.arity()) {
    throw std::invalid_argument("pullback: map size differs from arity");
  }
  std::vector<bool> hit(m, false);
  for (int t : inj) {
    if (t < 0 || t >= m || hit[t]) throw std::invalid_argument("pullback: map not injective");
    hit[t] = true;
  }
  SurfaceClass out(m);
  for (const auto& [mono, c] : a.terms()) out.add(mono.relabeled(inj, m), c);
  return out;
}

SurfaceClass pushforward(const SurfaceClass& a, const std::vector<int>& forget) {
  const int k = a.arity();
  std::vector<bool> gone(k, false);
  for (int i : forget) {
    if (i < 0 || i >= k) throw std::invalid_argument("pushforward: index out of range");
    gone[i] = true;
  }
  std::vector<int> map(k, -1);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    if (!gone[i]) map[i] = next++;
  }
  SurfaceClass out(next);
  for (const auto& [mono, c] : a.terms()) {
    Monomial m = mono;
    bool alive = true;
    for (int i = 0; i < k && alive; ++i) {
      if (!gone[i]) continue;
      if (m.matched(i)) {
        m.unmatch(i);
      } else if (m.label(i).kind != Label::Kind::kPoint) {
        alive = false;
      }
    }
    if (!alive) continue;
    Monomial r(next);
    for (int i = 0; i < k; ++i) {
      if (gone[i]) continue;
      if (m.matched(i)) {
        const int j = m.partner(i);
        if (j > i) r.match(map[i], map[j]);
      } else {
        r.set_label(map[i], m.label(i));
      }
    }
    out.add(r, c);
  }
  return out;
}

Rational integrate_all(const SurfaceClass& a) {
  Rational total = 0;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_point_top()) total += c;
  }
  return total;
}

SurfaceClass permute(const SurfaceClass& a, const std::vector<int>& perm) {
  return pullback(a, perm, a.arity());
}

SurfaceClass transpose(const SurfaceClass& a, int p, int q) {
  if (p < 0 || q < 0 || p + q != a.arity()) {
    throw std::invalid_argument("transpose: block sizes do not match arity");
  }
  std::vector<int> perm(a.arity());
  for (int i = 0; i < p; ++i) perm[i] = q + i;
  for (int i = 0; i < q; ++i) perm[p + i] = i;
  return permute(a, perm);
}

SurfaceClass symmetrize(const SurfaceClass& a, const std::vector<std::vector<int>>& blocks) {
  const int k = a.arity();
  std::vector<int> seen(k, 0);
  for (const auto& b : blocks) {
    for (int i : b) {
      if (i < 0 || i >= k || seen[i]++) throw std::invalid_argument("symmetrize: blocks must be disjoint");
    }
  }
  // Enumerate the product of the symmetric groups block by block.
  std::vector<std::vector<int>> perms{std::vector<int>(k)};
  std::iota(perms[0].begin(), perms[0].end(), 0);
  for (const auto& b : blocks) {
    if (b.size() < 2) continue;
    std::vector<int> images = b;
    std::sort(images.begin(), images.end());
    std::vector<std::vector<int>> next;
    do {
      for (const auto& p : perms) {
        auto q = p;
        for (std::size_t t = 0; t < b.size(); ++t) q[b[t]] = images[t];
        next.push_back(std::move(q));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    perms = std::move(next);
  }
  SurfaceClass out(k);
  for (const auto& p : perms) out += permute(a, p);
  out *= Rational(1, static_cast<long>(perms.size()));
  return out;
}

SurfaceClass exterior(const SurfaceClass& a, const SurfaceClass& b) {
  const int ka = a.arity();
  const int kb = b.arity();
  SurfaceClass out(ka + kb);
  std::vector<int> shift(kb);
  std::iota(shift.begin(), shift.end(), ka);
  std::vector<int> ident(ka);
  std::iota(ident.begin(), ident.end(), 0);
  for (const auto& [ma, ca] : a.terms()) {
    const Monomial pa = ma.relabeled(ident, ka + kb);
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = pa;
      const Monomial pb = mb.relabeled(shift, ka + kb);
      for (int i = ka; i < ka + kb; ++i) {
        if (pb.matched(i)) {
          if (pb.partner(i) > i) m.match(i, pb.partner(i));
        } else {
          m.set_label(i, pb.label(i));
        }
      }
      out.add(m, ca * cb);
    }
  }
  return out;
}

}  // namespace k3fock::taut
