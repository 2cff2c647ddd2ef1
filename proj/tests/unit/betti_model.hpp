#pragma once

// Independent oracle: the cohomology of a K3 surface as a 24-dimensional
// Frobenius algebra H = Q·1 ⊕ H² ⊕ Q·pt, with H*(S^k) = H^{⊗k} stored
// sparsely. Tautological classes are mapped in through the cycle class map,
// which must be a ring homomorphism.

#include <map>
#include <vector>

#include "k3fock/rational.hpp"
#include "k3fock/taut/ring.hpp"

namespace betti {

using k3fock::Rational;
using Tensor = std::map<std::vector<int>, Rational>;

constexpr int kDim = 24;
constexpr int kPt = 23;

struct Model {
  // Intersection form on H² (indices 1..22): the lattice block on the first
  // ρ coordinates, identity elsewhere.
  std::vector<std::vector<Rational>> q;
  std::vector<std::vector<Rational>> q_inv;

  explicit Model(const k3fock::taut::DivisorLattice& lat) {
    const int r = lat.rank();
    q.assign(22, std::vector<Rational>(22, 0));
    for (int i = 0; i < 22; ++i) q[i][i] = 1;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q[i][j] = lat.pairing(i, j);
    q_inv = invert(q);
  }

  static std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      const Rational s = 1 / a[c][c];
      for (int j = 0; j < n; ++j) {
        a[c][j] *= s;
        inv[c][j] *= s;
      }
      for (int i = 0; i < n; ++i) {
        if (i == c || a[i][c] == 0) continue;
        const Rational f = a[i][c];
        for (int j = 0; j < n; ++j) {
          a[i][j] -= f * a[c][j];
          inv[i][j] -= f * inv[c][j];
        }
      }
    }
    return inv;
  }

  // Cup product of basis vectors a·b as a sparse vector.
  std::vector<std::pair<int, Rational>> cup(int a, int b) const {
    if (a == 0) return {{b, 1}};
    if (b == 0) return {{a, 1}};
    if (a == kPt || b == kPt) return {};
    const Rational v = q[a - 1][b - 1];
    if (v == 0) return {};
    return {{kPt, v}};
  }

  // Δ = Σ e_a ⊗ e^a with e^a dual under the Poincaré pairing.
  std::vector<std::pair<std::pair<int, int>, Rational>> diagonal() const {
    std::vector<std::pair<std::pair<int, int>, Rational>> out;
    out.push_back({{0, kPt}, 1});
    out.push_back({{kPt, 0}, 1});
    for (int a = 0; a < 22; ++a)
      for (int b = 0; b < 22; ++b)
        if (q_inv[a][b] != 0) out.push_back({{a + 1, b + 1}, q_inv[a][b]});
    return out;
  }

  Tensor image(const k3fock::taut::Monomial& m) const {
    const int k = m.arity();
    Tensor cur{{std::vector<int>(k, 0), Rational(1)}};
    const auto diag = diagonal();
    for (const auto& [i, j] : m.matching()) {
      Tensor next;
      for (const auto& [idx, c] : cur)
        for (const auto& [ab, d] : diag) {
          auto t = idx;
          t[i] = ab.first;
          t[j] = ab.second;
          next[t] += c * d;
        }
      cur = std::move(next);
    }
    for (const auto& [i, l] : m.labels()) {
      const int e = l.kind == k3fock::taut::Label::Kind::kPoint ? kPt : 1 + l.div;
      Tensor next;
      for (const auto& [idx, c] : cur) {
        auto t = idx;
        t[i] = e;
        next[t] += c;
      }
      cur = std::move(next);
    }
    return prune(cur);
  }

  Tensor image(const k3fock::taut::SurfaceClass& a) const {
    Tensor out;
    for (const auto& [m, c] : a.terms())
      for (const auto& [idx, v] : image(m)) out[idx] += c * v;
    return prune(out);
  }

  Tensor mul(const Tensor& x, const Tensor& y) const {
    Tensor out;
    for (const auto& [ix, cx] : x)
      for (const auto& [iy, cy] : y) {
        std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, cx * cy}};
        for (std::size_t t = 0; t < ix.size() && !partial.empty(); ++t) {
          const auto prod = cup(ix[t], iy[t]);
          std::vector<std::pair<std::vector<int>, Rational>> next;
          for (const auto& [p, c] : partial)
            for (const auto& [e, v] : prod) {
              auto q2 = p;
              q2.push_back(e);
              next.emplace_back(std::move(q2), c * v);
            }
          partial = std::move(next);
        }
        for (const auto& [p, c] : partial) out[p] += c;
      }
    return prune(out);
  }

  static Tensor prune(Tensor t) {
    for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
    return t;
  }
};

}  // namespace betti
