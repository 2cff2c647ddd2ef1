// Compatibility of h̃, h_αβ, h_αδ with cup product, Chern and divisor
// classes, and the decomposition tables.

#include <sstream>

#include "k3fock/ops/calculus.hpp"
#include "k3fock/ops/operators.hpp"
#include "k3fock/ops/weights.hpp"
#include "k3fock/verify/tables.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace k3fock::verify::detail {

using fock::FockVector;
using fock::Matrix;
using ops::OpExpr;
using taut::SurfaceClass;

namespace {

struct Generator {
  std::vector<int> ds;
  SurfaceClass gamma;

  std::string name() const {
    std::ostringstream os;
    os << "univ_";
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i];
    os << "(" << str(gamma) << ")";
    return os.str();
  }
};

/// univ_{d_1..d_t}(Γ) with 2 <= d_1 <= ... <= d_t <= 4 and Γ a canonical monomial.
std::vector<Generator> generators(const taut::TautRing& r, int t) {
  std::vector<std::vector<int>> dss;
  if (t == 1) {
    for (int d = 2; d <= 4; ++d) dss.push_back({d});
  } else {
    for (int a = 2; a <= 4; ++a) {
      for (int b = a; b <= 4; ++b) dss.push_back({a, b});
    }
  }
  std::vector<Generator> out;
  for (const auto& ds : dss) {
    for (const auto& g : basis_classes(r, t)) out.push_back({ds, g});
  }
  return out;
}

OpExpr mult(const taut::TautRing& r, const Generator& g, int n) { return ops::op_mult_universal(r, g.ds, g.gamma, n); }

FockVector univ(const taut::TautRing& r, const Generator& g, int n) {
  return ops::universal_class(r, g.ds, g.gamma, n);
}

std::vector<std::pair<std::string, OpExpr>> derivations_at(const taut::TautRing& r, int n) {
  std::vector<std::pair<std::string, OpExpr>> out{{"h̃", ops::op_h_tilde(r, n)}};
  const auto ds = divisors(r);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      out.emplace_back("h_αβ with α=" + str(ds[i]) + " β=" + str(ds[j]), ops::op_h_alpha_beta(r, ds[i], ds[j], n));
    }
  }
  for (const auto& a : ds) out.emplace_back("h_αδ with α=" + str(a), ops::op_h_alpha_delta(r, a, n));
  return out;
}

std::vector<Check> derivation_checks() {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 1; t <= 2; ++t) {
      out.push_back(make_check("derivations.grading", "[h̃, mult_x] = mult_{h̃(x)}", {{"n", n}, {"t", t}, {"d", 4}},
                               [n, t](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const OpExpr h = ops::op_h_tilde(r, n);
        for (const auto& g : generators(r, t)) {
          const Matrix lhs = bracket(ctx, h, mult(r, g, n), n);
          const Generator shifted{g.ds, ops::h_tilde_shift(r, g.ds, g.gamma)};
          if (auto w = compare(lhs, mat(ctx, mult(r, shifted, n), n), "x=" + g.name())) return w;
        }
        return std::nullopt;
      }));
      out.push_back(make_check("derivations.alpha_beta", "[h_αβ, mult_x] = mult_{h_αβ(x)}",
                               {{"n", n}, {"t", t}, {"d", 4}}, [n, t](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const auto ds = divisors(r);
        for (std::size_t i = 0; i < ds.size(); ++i) {
          for (std::size_t j = i + 1; j < ds.size(); ++j) {
            const OpExpr h = ops::op_h_alpha_beta(r, ds[i], ds[j], n);
            for (const auto& g : generators(r, t)) {
              const Matrix lhs = bracket(ctx, h, mult(r, g, n), n);
              const Generator shifted{g.ds, ops::h_alpha_beta_shift(r, g.gamma, ds[i], ds[j])};
              if (auto w = compare(lhs, mat(ctx, mult(r, shifted, n), n),
                                   "α=" + str(ds[i]) + " β=" + str(ds[j]) + " x=" + g.name())) {
                return w;
              }
            }
          }
        }
        return std::nullopt;
      }));
      out.push_back(make_check("derivations.leibniz", "H(x ∪ y) = H(x) ∪ y + x ∪ H(y) for H = h̃, h_αβ, h_αδ",
                               {{"n", n}, {"t", t}, {"d", 4}}, [n, t](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const auto xs = generators(r, t);
        const auto ys = generators(r, 1);
        std::vector<FockVector> yv;
        std::vector<OpExpr> ym;
        for (const auto& y : ys) {
          yv.push_back(univ(r, y, n));
          ym.push_back(mult(r, y, n));
        }
        for (const auto& [hname, h] : derivations_at(r, n)) {
          std::vector<FockVector> hy;
          for (const auto& v : yv) hy.push_back(h.apply(r, v));
          for (const auto& x : xs) {
            const OpExpr mx = mult(r, x, n);
            const FockVector hx = h.apply(r, univ(r, x, n));
            for (std::size_t j = 0; j < ys.size(); ++j) {
              const FockVector lhs = h.apply(r, mx.apply(r, yv[j]));
              const FockVector rhs = ym[j].apply(r, hx) + mx.apply(r, hy[j]);
              if (auto w = compare(lhs, rhs, hname + " x=" + x.name() + " y=" + ys[j].name(), "x ∪ y")) return w;
            }
          }
        }
        return std::nullopt;
      }));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// chern

/// Classes whose h̃-eigenvalue is their degree: univ_d(γ) for γ in {1, α, c}
/// and univ_{d_1,d_2}(Γ) for Γ in {Δ, Δc_1}.
std::vector<std::pair<Generator, int>> graded_generators(const taut::TautRing& r) {
  std::vector<SurfaceClass> singles{SurfaceClass::one(1)};
  for (const auto& a : divisors(r)) singles.push_back(a);
  singles.push_back(r.point(1, 0));
  const SurfaceClass delta = r.diagonal(2, 0, 1);
  const std::vector<SurfaceClass> doubles{delta, r.mul(delta, r.point(2, 0))};
  std::vector<std::pair<Generator, int>> out;
  for (int d = 2; d <= 4; ++d) {
    for (const auto& g : singles) out.push_back({{{d}, g}, d + *g.homogeneous_codim() - 2});
  }
  for (int a = 2; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      for (const auto& g : doubles) out.push_back({{{a, b}, g}, a + b + *g.homogeneous_codim() - 4});
    }
  }
  return out;
}

std::vector<Check> chern_checks() {
  std::vector<Check> out;
  out.push_back(make_check("chern.bar_criterion",
                           "Σ_i ∫_• Γ_{1...i-1,•,i+1...t}(c_i - c_•) = (deg Γ - t) Γ for Γ in {1, α, c, Δ, Δc_1}", {},
                           [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    std::vector<SurfaceClass> gammas{SurfaceClass::one(1)};
    for (const auto& a : divisors(r)) gammas.push_back(a);
    gammas.push_back(r.point(1, 0));
    gammas.push_back(r.diagonal(2, 0, 1));
    gammas.push_back(r.mul(r.diagonal(2, 0, 1), r.point(2, 0)));
    for (const auto& g : gammas) {
      const int t = g.arity();
      const SurfaceClass lhs = ops::bar(r, g, ops::leading(t));
      if (auto w = compare(lhs, Rational(*g.homogeneous_codim() - t) * g, "Γ=" + str(g))) return w;
    }
    return std::nullopt;
  }));
  for (int n = 1; n <= 3; ++n) {
    out.push_back(make_check("chern.universal_degrees", "h̃(univ_{d_1..d_t}(Γ)) = (d_1 + ... + d_t + deg Γ - 2t) univ_{d_1..d_t}(Γ)",
                             {{"n", n}, {"d", 4}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const OpExpr h = ops::op_h_tilde(r, n);
      for (const auto& [g, deg] : graded_generators(r)) {
        const FockVector x = univ(r, g, n);
        if (auto w = compare(h.apply(r, x), Rational(deg) * x, g.name(), "level " + std::to_string(n))) return w;
      }
      return std::nullopt;
    }));
    for (int k = 1; k <= 3; ++k) {
      out.push_back(make_check("chern.tangent_degree", "h̃(ch_k(Tan)) = k ch_k(Tan)", {{"n", n}, {"k", k}},
                               [n, k](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const FockVector ch = ops::op_mult_chern(r, k, n).apply(r, ops::fundamental_class(n));
        return compare(ops::op_h_tilde(r, n).apply(r, ch), Rational(k) * ch, "ch_" + std::to_string(k),
                       "level " + std::to_string(n));
      }));
      out.push_back(make_check("chern.alpha_delta", "[h_αδ, mult_{ch_k(Tan)}] = 0", {{"n", n}, {"k", k}},
                               [n, k](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const OpExpr ch = ops::op_mult_chern(r, k, n);
        for (const auto& a : divisors(r)) {
          const Matrix lhs = bracket(ctx, ops::op_h_alpha_delta(r, a, n), ch, n);
          if (auto w = compare(lhs, fock::zero_matrix(ctx.space, n, n), "α=" + str(a))) return w;
        }
        return std::nullopt;
      }));
    }
    out.push_back(make_check("chern.odd_cancellation",
                             "Σ_{i+j=k+2} (-1)^{j+1} G_i G_j(Δ) + 2 Σ_{i+j=k} (-1)^{j+1} G_i(c) G_j(c) = 0 for odd k",
                             {{"n", n}, {"k", 3}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const SurfaceClass delta = r.diagonal(2, 0, 1);
      const SurfaceClass cc = r.mul(r.point(2, 0), r.point(2, 1));
      for (int k = 1; k <= 3; k += 2) {
        OpExpr sum;
        for (int i = 2; i <= k; ++i) {
          const int j = k + 2 - i;
          const Rational sign = j % 2 == 0 ? -1 : 1;
          sum += sign * ops::op_mult_universal(r, {i, j}, delta, n);
        }
        for (int i = 2; i + 2 <= k; ++i) {
          const int j = k - i;
          const Rational sign = j % 2 == 0 ? -2 : 2;
          sum += sign * ops::op_mult_universal(r, {i, j}, cc, n);
        }
        if (auto w = compare(mat(ctx, sum, n), fock::zero_matrix(ctx.space, n, n), "k=" + std::to_string(k))) return w;
      }
      return std::nullopt;
    }));
    out.push_back(make_check("chern.alpha_delta_generators",
                             "[h_αδ, G_d(1)] = -G_2(α) G_{d-1}(1) - G_2(1) G_{d-1}(α) + 2 G_{d-1}(α), "
                             "[h_αδ, G_d(c)] = -G_2(α) G_{d-1}(c) - G_{d+1}(α)",
                             {{"n", n}, {"d", 4}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const SurfaceClass one = SurfaceClass::one(1), c = r.point(1, 0);
      for (const auto& a : divisors(r)) {
        const OpExpr h = ops::op_h_alpha_delta(r, a, n);
        for (int d = 2; d <= 4; ++d) {
          OpExpr rhs1 = Rational(-1) * compose(ops::op_G(r, 2, a, n), ops::op_G(r, d - 1, one, n));
          rhs1 -= compose(ops::op_G(r, 2, one, n), ops::op_G(r, d - 1, a, n));
          rhs1 += Rational(2) * ops::op_G(r, d - 1, a, n);
          const std::string at = "α=" + str(a) + " d=" + std::to_string(d);
          if (auto w = compare(bracket(ctx, h, ops::op_G(r, d, one, n), n), mat(ctx, rhs1, n), "G_d(1) " + at)) return w;
          OpExpr rhs2 = Rational(-1) * compose(ops::op_G(r, 2, a, n), ops::op_G(r, d - 1, c, n));
          rhs2 -= ops::op_G(r, d + 1, a, n);
          if (auto w = compare(bracket(ctx, h, ops::op_G(r, d, c, n), n), mat(ctx, rhs2, n), "G_d(c) " + at)) return w;
        }
      }
      return std::nullopt;
    }));
  }
  out.push_back(make_check("chern.surface", "ch_1(T_S) = 0, ch_2(T_S) = -24 c", {{"n", 1}, {"k", 2}},
                           [](const Context& ctx) -> MaybeWitness {
    const auto& r = ctx.space.ring();
    const FockVector one = ops::fundamental_class(1);
    const FockVector ch1 = ops::op_mult_chern(r, 1, 1).apply(r, one);
    if (auto w = compare(ch1, FockVector(1), "ch_1", "1_1")) return w;
    const FockVector ch2 = ops::op_mult_chern(r, 2, 1).apply(r, one);
    const FockVector expected = ops::op_q({1}, Rational(-24) * r.point(1, 0)).apply(r, fock::FockVector::vacuum());
    return compare(ch2, expected, "ch_2", "1_1");
  }));
  return out;
}

// ---------------------------------------------------------------------------
// tables

int cell(const std::vector<TableRow>& rows, int i, const Rational& s) {
  for (const auto& row : rows) {
    if (row.i == i && row.s == s) return row.dim;
  }
  return 0;
}

std::string table_str(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) os << "(" << row.i << "," << row.s.get_str() << "):" << row.dim << " ";
  return os.str();
}

std::vector<Check> table_checks() {
  std::vector<Check> out;
  out.push_back(make_check("tables.vacuum", "A^*(Hilb_0) = A^0(Hilb_0)_0", {{"n", 0}}, [](const Context& ctx) -> MaybeWitness {
    const auto rows = level_table(ctx.space, 0);
    if (rows.size() == 1 && cell(rows, 0, 0) == 1) return std::nullopt;
    return Witness{"level 0", "v", table_str(rows), "(0,0):1"};
  }));
  out.push_back(make_check("tables.surface", "A^i(S) = A^i(S)_0 for i = 0, 1, 2", {{"n", 1}}, [](const Context& ctx) -> MaybeWitness {
    const auto rows = level_table(ctx.space, 1);
    const int rank = ctx.space.ring().lattice().rank();
    const std::string expected = "(0,0):1 (1,0):" + std::to_string(rank) + " (2,0):1 ";
    if (table_str(rows) == expected) return std::nullopt;
    return Witness{"level 1", "", table_str(rows), expected};
  }));
  for (int n = 0; n <= 3; ++n) {
    out.push_back(make_check("tables.row_sums", "Σ_s dim A^i(Hilb_n)_{2s} = dim A^i(Hilb_n)", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto rows = level_table(ctx.space, n);
      std::map<int, int> by_codim, sums;
      for (const auto& key : ctx.space.basis(n)->keys) ++by_codim[fock::FockSpace::codim_of(key)];
      for (const auto& row : rows) sums[row.i] += row.dim;
      if (sums == by_codim) return std::nullopt;
      std::ostringstream want;
      for (const auto& [i, d] : by_codim) want << "i=" << i << ":" << d << " ";
      return Witness{"level " + std::to_string(n), "", table_str(rows), want.str()};
    }));
    out.push_back(make_check("tables.fundamental_class", "1_n ∈ A^0(Hilb_n)_0", {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      const auto blocks = ops::refined_decomposition(ctx.space, n);
      const auto table = ctx.space.basis(n);
      const FockVector one = ops::fundamental_class(n);
      std::vector<Rational> v(table->size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = one.coefficient(table->keys[j]);
      for (const auto& b : blocks) {
        if (b.weight.i != 0 || b.weight.s != 0) continue;
        ops::DenseMatrix m = b.basis;
        const int rank = ops::dense_rank(m);
        m.push_back(v);
        if (ops::dense_rank(m) == rank) return std::nullopt;
      }
      return Witness{"level " + std::to_string(n), "1_" + std::to_string(n), "outside the (0,0) block", "inside"};
    }));
  }
  for (int n = 1; n <= 2; ++n) {
    out.push_back(make_check("tables.projector_ranks", "rank P_j = Σ_{i-s-n=j} dim A^i(Hilb_n)_{2s}", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto rows = level_table(ctx.space, n);
      for (int j = -n; j <= n; ++j) {
        int from_table = 0;
        for (const auto& row : rows) {
          if (Rational(row.i) - row.s - n == j) from_table += row.dim;
        }
        const auto p = fock::dense(ctx.space, mat(ctx, ops::op_projector(ctx.space.ring(), j, n), n));
        const int rank = ops::dense_rank(p);
        if (rank != from_table) {
          return Witness{"j=" + std::to_string(j), "", "table " + std::to_string(from_table),
                         "rank " + std::to_string(rank)};
        }
      }
      return std::nullopt;
    }));
  }
  return out;
}

}  // namespace

std::vector<Check> mult_suite(const std::string& suite) {
  if (suite == "derivations") return derivation_checks();
  if (suite == "chern") return chern_checks();
  if (suite == "tables") return table_checks();
  return {};
}

}  // namespace k3fock::verify::detail
