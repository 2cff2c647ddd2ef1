// Ring identities, Heisenberg relations, diagonal decomposition, projectors.

#include <algorithm>
#include <random>
#include <sstream>

#include "k3fock/ops/calculus.hpp"
#include "k3fock/ops/operators.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace k3fock::verify::detail {

using fock::Matrix;
using ops::OpExpr;
using taut::SurfaceClass;

namespace {

SurfaceClass trailing(const SurfaceClass& a, int k) {
  std::vector<int> inj(a.arity());
  for (int j = 0; j < a.arity(); ++j) inj[j] = k + j;
  return pullback(a, inj, k + a.arity());
}

/// γ with its first index at p of S^k and the rest after k.
SurfaceClass spread(const taut::TautRing& ring, const SurfaceClass& gamma, int p, int k) {
  return ops::diagonal_times(ring, k, {}, gamma, p);
}

SurfaceClass points(const taut::TautRing& ring, int arity, int k, std::vector<int> skip) {
  SurfaceClass out = SurfaceClass::one(arity);
  for (int s = 0; s < k; ++s) {
    if (std::find(skip.begin(), skip.end(), s) == skip.end()) out = ring.mul(out, ring.point(arity, s));
  }
  return out;
}

SurfaceClass integral_with(const taut::TautRing& ring, const SurfaceClass& gamma, const SurfaceClass& x) {
  return ops::integrate_first(ring.mul(gamma, pullback(x, {0}, gamma.arity())));
}

std::vector<Check> ring_checks() {
  std::vector<Check> out;
  out.push_back(make_check("ring.point_diagonal", "Δ·c_1 = Δ·c_2 = c_1·c_2", {}, [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    const SurfaceClass d = r.diagonal(2, 0, 1);
    const SurfaceClass cc = r.mul(r.point(2, 0), r.point(2, 1));
    if (auto w = compare(r.mul(d, r.point(2, 0)), cc, "Δ·c_1")) return w;
    return compare(r.mul(d, r.point(2, 1)), cc, "Δ·c_2");
  }));
  out.push_back(make_check("ring.divisor_diagonal", "Δ·α_1 = Δ·α_2 = α_1·c_2 + α_2·c_1", {},
                           [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    const SurfaceClass d = r.diagonal(2, 0, 1);
    for (const auto& a : divisors(r)) {
      const SurfaceClass a1 = pullback(a, {0}, 2), a2 = pullback(a, {1}, 2);
      const SurfaceClass rhs = r.mul(a1, r.point(2, 1)) + r.mul(a2, r.point(2, 0));
      if (auto w = compare(r.mul(d, a1), rhs, "Δ·α_1 with α = " + str(a))) return w;
      if (auto w = compare(r.mul(d, a2), rhs, "Δ·α_2 with α = " + str(a))) return w;
    }
    return std::nullopt;
  }));
  out.push_back(make_check("ring.divisor_product", "α·β = (α, β) c", {}, [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    const auto ds = divisors(r);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = 0; j < ds.size(); ++j) {
        const SurfaceClass rhs = r.lattice().pairing(static_cast<int>(i), static_cast<int>(j)) * r.point(1, 0);
        if (auto w = compare(r.mul(ds[i], ds[j]), rhs, str(ds[i]) + " · " + str(ds[j]))) return w;
      }
    }
    return std::nullopt;
  }));
  out.push_back(make_check("ring.triple_diagonal",
                           "Δ_123 = Δ_12·c_3 + Δ_13·c_2 + Δ_23·c_1 - c_1·c_2 - c_1·c_3 - c_2·c_3", {},
                           [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    const SurfaceClass lhs = r.mul(r.diagonal(3, 0, 1), r.diagonal(3, 1, 2));
    const SurfaceClass rhs = r.mul(r.diagonal(3, 0, 1), r.point(3, 2)) + r.mul(r.diagonal(3, 0, 2), r.point(3, 1)) +
                             r.mul(r.diagonal(3, 1, 2), r.point(3, 0)) - points(r, 3, 3, {2}) - points(r, 3, 3, {1}) -
                             points(r, 3, 3, {0});
    return compare(lhs, rhs, "Δ_12·Δ_23");
  }));
  for (int k = 3; k <= 5; ++k) {
    out.push_back(make_check("ring.small_diagonal",
                             "Δ_{1...k} = Σ_{i<j} Δ_ij Π_{l≠i,j} c_l - (k-2) Σ_i Π_{l≠i} c_l", {{"k", k}},
                             [k](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      SurfaceClass chain = SurfaceClass::one(k);
      for (int i = 0; i + 1 < k; ++i) chain = r.mul(chain, r.diagonal(k, i, i + 1));
      SurfaceClass closed(k);
      for (int i = 0; i < k; ++i) {
        closed -= Rational(k - 2) * points(r, k, k, {i});
        for (int j = i + 1; j < k; ++j) closed += r.mul(r.diagonal(k, i, j), points(r, k, k, {i, j}));
      }
      return compare(chain, closed, "Δ_12·Δ_23···Δ_{k-1,k}");
    }));
  }
  for (int l = 0; l <= 1; ++l) {
    out.push_back(make_check("ring.point_pullback", "γ_1 c_1 = c_1 ∫_• γ_• c_•", {{"l", l}},
                             [l](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const SurfaceClass c = r.point(1, 0);
      for (const auto& g : basis_classes(r, 1 + l)) {
        const SurfaceClass lhs = r.mul(g, r.point(1 + l, 0));
        const SurfaceClass rhs = r.mul(r.point(1 + l, 0), trailing(integral_with(r, g, c), 1));
        if (auto w = compare(lhs, rhs, "γ = " + str(g))) return w;
      }
      return std::nullopt;
    }));
    out.push_back(make_check("ring.divisor_pullback", "γ_1 α_1 = c_1 ∫_• γ_• α_• + α_1 ∫_• γ_• c_•", {{"l", l}},
                             [l](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const SurfaceClass c = r.point(1, 0);
      for (const auto& a : divisors(r)) {
        for (const auto& g : basis_classes(r, 1 + l)) {
          const SurfaceClass lhs = r.mul(g, pullback(a, {0}, 1 + l));
          const SurfaceClass rhs = r.mul(r.point(1 + l, 0), trailing(integral_with(r, g, a), 1)) +
                                   r.mul(pullback(a, {0}, 1 + l), trailing(integral_with(r, g, c), 1));
          if (auto w = compare(lhs, rhs, "γ = " + str(g) + ", α = " + str(a))) return w;
        }
      }
      return std::nullopt;
    }));
    for (int k = 1; k <= 4; ++k) {
      out.push_back(make_check(
          "ring.diagonal_pullback",
          "γ_1 Δ_{1...k} = Σ_i γ_i Π_{j≠i} c_j + (Δ_{1...k} - Σ_i Π_{j≠i} c_j) ∫_• c_• γ_• - (k-1) c_1...c_k ∫_• γ_•",
          {{"k", k}, {"l", l}}, [k, l](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            const int ar = k + l;
            const SurfaceClass c = r.point(1, 0);
            const SurfaceClass delta = r.small_diagonal(ar, ops::leading(k));
            SurfaceClass singles(ar);
            for (int i = 0; i < k; ++i) singles += points(r, ar, k, {i});
            for (const auto& g : basis_classes(r, 1 + l)) {
              const SurfaceClass lhs = ops::diagonal_times(r, k, ops::leading(k), g, 0);
              SurfaceClass rhs(ar);
              for (int i = 0; i < k; ++i) rhs += r.mul(spread(r, g, i, k), points(r, ar, k, {i}));
              rhs += r.mul(delta - singles, trailing(integral_with(r, g, c), k));
              rhs -= Rational(k - 1) * r.mul(points(r, ar, k, {}), trailing(ops::integrate_first(g), k));
              if (auto w = compare(lhs, rhs, "γ = " + str(g))) return w;
            }
            return std::nullopt;
          }));
    }
  }
  out.push_back(make_check("ring.confluence", "products are independent of the order of multiplication", {{"seeds", 100}},
                           [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    constexpr int kArity = 4;
    const int rank = r.lattice().rank();
    for (unsigned s = 0; s < 100; ++s) {
      const unsigned seed = ctx.cfg.seed + s;
      std::mt19937 rng(seed);
      std::uniform_int_distribution<int> kind(0, 2), idx(0, kArity - 1), div(0, rank - 1), count(3, 6);
      std::vector<SurfaceClass> factors;
      std::vector<std::string> names;
      const int m = count(rng);
      for (int f = 0; f < m; ++f) {
        const int i = idx(rng);
        switch (kind(rng)) {
          case 0: factors.push_back(r.point(kArity, i)); break;
          case 1: factors.push_back(r.divisor(kArity, i, div(rng))); break;
          default: {
            int j = idx(rng);
            if (j == i) j = (i + 1) % kArity;
            factors.push_back(r.diagonal(kArity, i, j));
          }
        }
        names.push_back(str(factors.back()));
      }
      SurfaceClass left = SurfaceClass::one(kArity);
      for (const auto& f : factors) left = r.mul(left, f);
      std::vector<int> order(factors.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::shuffle(order.begin(), order.end(), rng);
      SurfaceClass right = SurfaceClass::one(kArity);
      for (auto it = order.rbegin(); it != order.rend(); ++it) right = r.mul(factors[*it], right);
      std::ostringstream inst;
      inst << "seed " << seed << ":";
      for (const auto& n : names) inst << " (" << n << ")";
      if (auto w = compare(left, right, inst.str())) return w;
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<Check> heisenberg_checks() {
  std::vector<Check> out;
  for (int n = 0; n <= 4; ++n) {
    out.push_back(make_check("heisenberg.relations", "[q_k(x), q_l(y)] = k δ_{k+l,0} (x, y) Id", {{"n", n}, {"k", 4}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const auto labels = basis_classes(r, 1);
      const Matrix id = fock::identity_matrix(ctx.space, n);
      for (int k = -4; k <= 4; ++k) {
        for (int l = -4; l <= 4; ++l) {
          if (k == 0 || l == 0 || n + k + l < 0) continue;
          for (const auto& x : labels) {
            for (const auto& y : labels) {
              const OpExpr qk = ops::op_q({k}, x), ql = ops::op_q({l}, y);
              const Matrix lhs = bracket(ctx, qk, ql, n);
              const Matrix rhs = k + l == 0 ? Rational(k) * r.pairing(x, y) * id
                                            : fock::zero_matrix(ctx.space, n, n + k + l);
              std::ostringstream inst;
              inst << "k=" << k << " l=" << l << " x=" << str(x) << " y=" << str(y);
              if (auto w = compare(lhs, rhs, inst.str())) return w;
            }
          }
        }
      }
      return std::nullopt;
    }));
  }
  return out;
}

std::vector<Check> diagonal_checks() {
  std::vector<Check> out;
  for (int n = 0; n <= 4; ++n) {
    out.push_back(make_check("diagonal.decomposition", "Σ_{λ⊢n} (-1)^{l(λ)} / z(λ) q_λ q_{-λ}(Δ) = Id", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      return compare(mat(ctx, ops::op_diagonal_decomposition(ctx.space.ring(), n), n),
                     fock::identity_matrix(ctx.space, n), "level " + std::to_string(n));
    }));
  }
  return out;
}

std::vector<Matrix> projector_matrices(const Context& ctx, int n) {
  std::vector<Matrix> p;
  for (int i = -n; i <= n; ++i) p.push_back(mat(ctx, ops::op_projector(ctx.space.ring(), i, n), n));
  return p;
}

std::vector<Check> projector_checks() {
  std::vector<Check> out;
  for (int n = 0; n <= 3; ++n) {
    out.push_back(make_check("projectors.orthogonality", "P_i ∘ P_j = δ_ij P_i", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto p = projector_matrices(ctx, n);
      for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
          const Matrix lhs = fock::compose(p[i + n], p[j + n]);
          const Matrix rhs = i == j ? p[i + n] : fock::zero_matrix(ctx.space, n, n);
          if (auto w = compare(lhs, rhs, "i=" + std::to_string(i) + " j=" + std::to_string(j))) return w;
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("projectors.grading", "h ∘ P_i = i P_i", {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      const auto p = projector_matrices(ctx, n);
      const Matrix h = mat(ctx, ops::op_h(ctx.space.ring(), n), n);
      for (int i = -n; i <= n; ++i) {
        if (auto w = compare(fock::compose(h, p[i + n]), Rational(i) * p[i + n], "i=" + std::to_string(i))) return w;
      }
      return std::nullopt;
    }));
    out.push_back(make_check("projectors.completeness", "Σ_i P_i = Id", {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      Matrix sum = fock::zero_matrix(ctx.space, n, n);
      for (const auto& p : projector_matrices(ctx, n)) sum += p;
      return compare(sum, fock::identity_matrix(ctx.space, n), "sum over i");
    }));
    out.push_back(make_check("projectors.range", "P_i = 0 unless i ∈ {-n, ..., n}", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      for (int i : {-n - 2, -n - 1, n + 1, n + 2}) {
        const Matrix p = mat(ctx, ops::op_projector(ctx.space.ring(), i, n), n);
        if (auto w = compare(p, fock::zero_matrix(ctx.space, n, n), "i=" + std::to_string(i))) return w;
      }
      return std::nullopt;
    }));
  }
  return out;
}

}  // namespace

std::vector<Check> basic_suite(const std::string& suite) {
  if (suite == "ring") return ring_checks();
  if (suite == "heisenberg") return heisenberg_checks();
  if (suite == "diagonal") return diagonal_checks();
  if (suite == "projectors") return projector_checks();
  return {};
}

}  // namespace k3fock::verify::detail
