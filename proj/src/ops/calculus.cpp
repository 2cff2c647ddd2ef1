#include "k3fock/ops/calculus.hpp"

#include <stdexcept>

#include "k3fock/faults.hpp"

namespace k3fock::ops {

using taut::SurfaceClass;

namespace {

/// Φ with index i moved to a new last index; the other indices stay put.
SurfaceClass move_to_bullet(const SurfaceClass& phi, int i) {
  const int k = phi.arity();
  std::vector<int> inj(k);
  for (int j = 0; j < k; ++j) inj[j] = j;
  inj[i] = k;
  return pullback(phi, inj, k + 1);
}

/// γ over S × S^l with its first index at p and the rest at k, k+1, ...
SurfaceClass spread(const SurfaceClass& gamma, int p, int k) {
  std::vector<int> inj(gamma.arity());
  inj[0] = p;
  for (int j = 1; j < gamma.arity(); ++j) inj[j] = k + j - 1;
  return pullback(gamma, inj, k + gamma.arity() - 1);
}

/// A class on S^l placed on the trailing indices of S^{k+l}.
SurfaceClass trailing(const SurfaceClass& a, int k) {
  std::vector<int> inj(a.arity());
  for (int j = 0; j < a.arity(); ++j) inj[j] = k + j;
  return pullback(a, inj, k + a.arity());
}

SurfaceClass points_except(const taut::TautRing& ring, int k, int arity, const std::vector<int>& skip) {
  SurfaceClass out = SurfaceClass::one(arity);
  for (int s = 0; s < k; ++s) {
    bool skipped = false;
    for (int t : skip) skipped = skipped || t == s;
    if (!skipped) out = ring.mul(out, ring.point(arity, s));
  }
  return out;
}

SurfaceClass times_first(const taut::TautRing& ring, const SurfaceClass& x, const SurfaceClass& gamma) {
  return ring.mul(pullback(x, {0}, gamma.arity()), gamma);
}

struct Integrals {
  SurfaceClass plain, with_alpha, with_point;  // ∫γ, ∫γα, ∫γc on S^l
};

Integrals integrals(const taut::TautRing& ring, const SurfaceClass& gamma, const SurfaceClass& alpha) {
  return {integrate_first(gamma), integrate_first(times_first(ring, alpha, gamma)),
          integrate_first(times_first(ring, ring.point(1, 0), gamma))};
}

void check_gamma(const SurfaceClass& gamma) {
  if (gamma.arity() < 1) throw std::invalid_argument("γ needs at least one index");
}

}  // namespace

SurfaceClass integrate_first(const SurfaceClass& phi) { return pushforward(phi, {0}); }

SurfaceClass bar(const taut::TautRing& ring, const SurfaceClass& phi, const std::vector<int>& idx) {
  const int k = phi.arity();
  SurfaceClass out(k);
  const bool flipped = fault_active(Fault::kBarPointSign);
  for (int i : idx) {
    SurfaceClass weight = ring.point(k + 1, i) - ring.point(k + 1, k);
    if (flipped) weight = -weight;
    out += pushforward(ring.mul(move_to_bullet(phi, i), weight), {k});
  }
  return out;
}

SurfaceClass double_bar(const taut::TautRing& ring, const SurfaceClass& phi, const std::vector<int>& idx,
                        const SurfaceClass& alpha, const SurfaceClass& beta) {
  const int k = phi.arity();
  SurfaceClass out(k);
  for (int i : idx) {
    const SurfaceClass weight = ring.mul(place(alpha, i, k + 1), place(beta, k, k + 1)) -
                                ring.mul(place(alpha, k, k + 1), place(beta, i, k + 1));
    out += pushforward(ring.mul(move_to_bullet(phi, i), weight), {k});
  }
  return out;
}

std::vector<int> leading(int count) {
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  return idx;
}

SurfaceClass h_tilde_shift(const taut::TautRing& ring, const std::vector<int>& ds, const SurfaceClass& gamma) {
  long total = 0;
  for (int d : ds) total += d - 1;
  return Rational(total) * gamma + bar(ring, gamma, leading(gamma.arity()));
}

SurfaceClass h_alpha_beta_shift(const taut::TautRing& ring, const SurfaceClass& gamma, const SurfaceClass& alpha,
                                const SurfaceClass& beta) {
  return double_bar(ring, gamma, leading(gamma.arity()), alpha, beta);
}

SurfaceClass place(const SurfaceClass& x, int i, int k) { return pullback(x, {i}, k); }

SurfaceClass diagonal_times(const taut::TautRing& ring, int k, const std::vector<int>& idx,
                            const SurfaceClass& gamma, int p) {
  check_gamma(gamma);
  const int arity = k + gamma.arity() - 1;
  return ring.mul(ring.small_diagonal(arity, idx), spread(gamma, p, k));
}

SurfaceClass cycle_a(const taut::TautRing& ring, int k, const SurfaceClass& gamma, const SurfaceClass& alpha) {
  check_gamma(gamma);
  if (k < 3) throw std::invalid_argument("cycle_a needs k >= 3");
  const int arity = k + gamma.arity() - 1;
  const SurfaceClass one = SurfaceClass::one(1);
  SurfaceClass out(arity);
  for (const auto& [x, y] : {std::pair{alpha, one}, std::pair{one, alpha}}) {
    const SurfaceClass xg = times_first(ring, x, gamma);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        std::vector<int> rest;
        for (int s = 0; s < k; ++s) {
          if (s != i && s != j) rest.push_back(s);
        }
        SurfaceClass term = diagonal_times(ring, k, rest, xg, rest.front());
        term = ring.mul(term, ring.diagonal(arity, i, j));
        out += ring.mul(term, place(y, i, arity));
      }
    }
  }
  return out;
}

SurfaceClass cycle_b(const taut::TautRing& ring, int k, const SurfaceClass& gamma, const SurfaceClass& alpha) {
  check_gamma(gamma);
  if (k < 2) throw std::invalid_argument("cycle_b needs k >= 2");
  const int arity = k + gamma.arity() - 1;
  const SurfaceClass one = SurfaceClass::one(1);
  SurfaceClass out(arity);
  for (const auto& [x, y] : {std::pair{alpha, one}, std::pair{one, alpha}}) {
    const SurfaceClass xg = times_first(ring, x, gamma);
    for (int i = 0; i < k; ++i) {
      std::vector<int> rest;
      for (int s = 0; s < k; ++s) {
        if (s != i) rest.push_back(s);
      }
      out += ring.mul(diagonal_times(ring, k, rest, xg, rest.front()), place(y, i, arity));
    }
  }
  return out;
}

namespace {

// Pieces shared by the two expansions, all on S^{k+l}.
struct Expansion {
  SurfaceClass alpha_gamma;      // Σ_{i≠j} α_i γ_j Π_{s≠i,j} c_s
  SurfaceClass alpha_points;     // Σ_i α_i Π_{j≠i} c_j
  SurfaceClass pair_points;      // Σ_{i<j} Δ_ij Π_{s≠i,j} c_s
  SurfaceClass single_points;    // Σ_i Π_{j≠i} c_j
  SurfaceClass alpha_pair;       // Σ_{i ≠ s<t ≠ i} α_i Δ_st Π_{j≠i,s,t} c_j
  SurfaceClass alpha_skip;       // Σ_i α_i Σ_{j≠i} Π_{s≠i,j} c_s
  SurfaceClass plain, with_alpha, with_point;
};

Expansion expansion(const taut::TautRing& ring, int k, const SurfaceClass& gamma, const SurfaceClass& alpha) {
  check_gamma(gamma);
  const int arity = k + gamma.arity() - 1;
  Expansion e{SurfaceClass(arity), SurfaceClass(arity), SurfaceClass(arity), SurfaceClass(arity),
              SurfaceClass(arity), SurfaceClass(arity), SurfaceClass(0), SurfaceClass(0), SurfaceClass(0)};
  for (int i = 0; i < k; ++i) {
    const SurfaceClass ai = place(alpha, i, arity);
    e.alpha_points += ring.mul(ai, points_except(ring, k, arity, {i}));
    e.single_points += points_except(ring, k, arity, {i});
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      e.alpha_gamma += ring.mul(ring.mul(ai, spread(gamma, j, k)), points_except(ring, k, arity, {i, j}));
      e.alpha_skip += ring.mul(ai, points_except(ring, k, arity, {i, j}));
      if (j > i) e.pair_points += ring.mul(ring.diagonal(arity, i, j), points_except(ring, k, arity, {i, j}));
    }
    for (int s = 0; s < k; ++s) {
      for (int t = s + 1; t < k; ++t) {
        if (s == i || t == i) continue;
        e.alpha_pair += ring.mul(ring.mul(ai, ring.diagonal(arity, s, t)), points_except(ring, k, arity, {i, s, t}));
      }
    }
  }
  const Integrals in = integrals(ring, gamma, alpha);
  e.plain = trailing(in.plain, k);
  e.with_alpha = trailing(in.with_alpha, k);
  e.with_point = trailing(in.with_point, k);
  return e;
}

}  // namespace

SurfaceClass cycle_a_expanded(const taut::TautRing& ring, int k, const SurfaceClass& gamma,
                              const SurfaceClass& alpha) {
  const Expansion e = expansion(ring, k, gamma, alpha);
  const Rational km2(k - 2), km3(k - 3), km1(k - 1);
  SurfaceClass out = km2 * e.alpha_gamma;
  out -= km1 * km3 * ring.mul(e.alpha_points, e.plain);
  out += ring.mul(e.pair_points, e.with_alpha);
  out += km2 * ring.mul(e.alpha_pair - km3 * e.alpha_skip, e.with_point);
  return out;
}

SurfaceClass cycle_b_expanded(const taut::TautRing& ring, int k, const SurfaceClass& gamma,
                              const SurfaceClass& alpha) {
  const Expansion e = expansion(ring, k, gamma, alpha);
  const Rational km2(k - 2), km3(k - 3);
  SurfaceClass out = e.alpha_gamma;
  out -= km2 * ring.mul(e.alpha_points, e.plain);
  out += ring.mul(e.single_points, e.with_alpha);
  out += ring.mul(e.alpha_pair - km3 * e.alpha_skip, e.with_point);
  return out;
}

}  // namespace k3fock::ops
