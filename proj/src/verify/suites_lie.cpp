// LQW brackets, the LLV action, and the commutators of h, h_αβ, h_αδ with
// Nakajima words and G-operators, including the intermediate identities used
// to derive them.

#include <sstream>

#include "k3fock/ops/calculus.hpp"
#include "k3fock/ops/gns.hpp"
#include "k3fock/ops/operators.hpp"
#include "suite_util.hpp"
#include "suites.hpp"

namespace k3fock::verify::detail {

using fock::Matrix;
using fock::Operator;
using ops::OpExpr;
using taut::SurfaceClass;

namespace {

SurfaceClass trailing(const SurfaceClass& a, int k) {
  std::vector<int> inj(a.arity());
  for (int j = 0; j < a.arity(); ++j) inj[j] = k + j;
  return pullback(a, inj, k + a.arity());
}

/// a on the first indices of S^m.
SurfaceClass widen(const SurfaceClass& a, int m) { return pullback(a, ops::leading(a.arity()), m); }

SurfaceClass one1() { return SurfaceClass::one(1); }

std::string inst(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

std::string num(long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// lqw

/// a∘b - b∘a for slotted operators with one open slot each, contracted
/// with Γ on S × S (index 0 of Γ is the slot of a).
Matrix slotted_bracket(const Context& ctx, const Operator& a, const Operator& b, const SurfaceClass& gamma, int n) {
  const auto& r = ctx.space.ring();
  const OpExpr ab = compose(OpExpr(a), OpExpr(b)).contract(r, gamma);
  const OpExpr ba = compose(OpExpr(b), OpExpr(a)).contract(r, transpose(gamma, 1, 1));
  return mat(ctx, ab, n) - mat(ctx, ba, n);
}

/// Γ restricted to the diagonal of S × S.
SurfaceClass on_diagonal(const taut::TautRing& r, const SurfaceClass& gamma) {
  return pushforward(r.mul(gamma, r.diagonal(2, 0, 1)), {1});
}

std::vector<Check> lqw_checks() {
  std::vector<Check> out;
  for (int n = 0; n <= 3; ++n) {
    out.push_back(make_check("lqw.heisenberg_bracket", "[q_m, J_0^d] = dm Δ_*(J_m^{d-1})", {{"n", n}, {"d", 3}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const int bound = n + 2;
      for (int d = 1; d <= 3; ++d) {
        const Operator j0 = ops::slot_J(r, 0, d, bound);
        for (int m = -2; m <= 2; ++m) {
          if (m == 0 || n + m < 0) continue;
          const Operator q = ops::slot_q(r, m);
          for (const auto& g : basis_classes(r, 2)) {
            const Matrix lhs = slotted_bracket(ctx, q, j0, g, n);
            const Matrix rhs = Rational(d * m) * mat(ctx, ops::op_J(r, m, d - 1, on_diagonal(r, g), bound), n);
            if (auto w = compare(lhs, rhs, inst({{"d", num(d)}, {"m", num(m)}, {"Γ", str(g)}}))) return w;
          }
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("lqw.virasoro_bracket",
                             "[L_m, J_0^d] = dm Δ_*(J_m^d) + 2d(d-1)m(m^2-1) Δ_*(ρ^*(c) J_m^{d-2})",
                             {{"n", n}, {"d", 3}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const int bound = n + 2;
      for (int d = 1; d <= 3; ++d) {
        const Operator j0 = ops::slot_J(r, 0, d, bound);
        for (int m = -2; m <= 2; ++m) {
          if (n + m < 0) continue;
          const Operator l = ops::slot_L(r, m, bound);
          for (const auto& g : basis_classes(r, 2)) {
            const SurfaceClass gd = on_diagonal(r, g);
            const Matrix lhs = slotted_bracket(ctx, l, j0, g, n);
            Matrix rhs = Rational(d * m) * mat(ctx, ops::op_J(r, m, d, gd, bound), n);
            if (d >= 2) {
              rhs += Rational(2 * d * (d - 1) * m * (m * m - 1)) *
                     mat(ctx, ops::op_J(r, m, d - 2, r.mul(gd, r.point(1, 0)), bound), n);
            }
            if (auto w = compare(lhs, rhs, inst({{"d", num(d)}, {"m", num(m)}, {"Γ", str(g)}}))) return w;
          }
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("lqw.virasoro_creation", "[L_k(γ), q_1(1)] = -q_{k+1}(γ)", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const OpExpr q1 = ops::op_q({1}, one1());
      for (int k = -2; k <= 2; ++k) {
        if (n + k + 1 < 0) continue;
        for (const auto& g : basis_classes(r, 1)) {
          const OpExpr l = ops::op_L(r, k, g, n + 3);
          const Matrix lhs = bracket(ctx, l, q1, n);
          const Matrix rhs = k == -1 ? fock::zero_matrix(ctx.space, n, n) : Rational(-1) * mat(ctx, ops::op_q({k + 1}, g), n);
          if (auto w = compare(lhs, rhs, inst({{"k", num(k)}, {"γ", str(g)}}))) return w;
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("lqw.round_trip", "J_0^d(γ) = d!(G_{d+1}(γ) + 2G_{d-1}(γc))", {{"n", n}, {"d", 3}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      Rational fact = 1;
      for (int d = 0; d <= 3; ++d) {
        if (d > 0) fact *= d;
        for (const auto& g : basis_classes(r, 1)) {
          const Matrix lhs = mat(ctx, ops::op_J(r, 0, d, g, n), n);
          const OpExpr g_sum = ops::op_G(r, d + 1, g, n) + Rational(2) * ops::op_G(r, d - 1, r.mul(g, r.point(1, 0)), n);
          if (auto w = compare(lhs, fact * mat(ctx, g_sum, n), inst({{"d", num(d)}, {"γ", str(g)}}))) return w;
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("lqw.low_degree", "J_k^0 = -q_k, J_k^1 = -L_k, G_2 = -L_0", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      for (const auto& g : basis_classes(r, 1)) {
        for (int k = -2; k <= 2; ++k) {
          if (n + k < 0) continue;
          const Matrix j0 = mat(ctx, ops::op_J(r, k, 0, g, n), n);
          const Matrix q = k == 0 ? fock::zero_matrix(ctx.space, n, n) : mat(ctx, ops::op_q({k}, g), n);
          if (auto w = compare(j0, Rational(-1) * q, inst({{"J", "J_k^0"}, {"k", num(k)}, {"γ", str(g)}}))) return w;
          const Matrix j1 = mat(ctx, ops::op_J(r, k, 1, g, n), n);
          const Matrix l = mat(ctx, ops::op_L(r, k, g, n), n);
          if (auto w = compare(j1, Rational(-1) * l, inst({{"J", "J_k^1"}, {"k", num(k)}, {"γ", str(g)}}))) return w;
        }
        const Matrix g2 = mat(ctx, ops::op_G(r, 2, g, n), n);
        if (auto w = compare(g2, Rational(-1) * mat(ctx, ops::op_L(r, 0, g, n), n), "G_2 with γ=" + str(g))) return w;
      }
      return std::nullopt;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// llv

std::vector<ops::GnsElement> gns_generators(const ops::MukaiBasis& mb) {
  std::vector<ops::GnsElement> out;
  for (int a = 0; a < mb.size(); ++a) {
    for (int b = a + 1; b < mb.size(); ++b) out.push_back(ops::GnsElement::wedge(a, b));
  }
  return out;
}

std::vector<Check> llv_checks() {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    out.push_back(make_check("llv.homomorphism", "act([x, y]) = [act(x), act(y)]", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const ops::MukaiForm form(r.lattice(), n);
      const auto gens = gns_generators(form.basis());
      std::vector<Matrix> m;
      for (const auto& g : gens) m.push_back(mat(ctx, ops::op_act(r, g, n), n));
      for (std::size_t x = 0; x < gens.size(); ++x) {
        for (std::size_t y = x + 1; y < gens.size(); ++y) {
          const ops::GnsElement xy = gns_bracket(form, gens[x], gens[y]);
          const Matrix lhs = mat(ctx, ops::op_act(r, xy, n), n);
          const std::string where = "[" + gens[x].to_string(form.basis()) + ", " + gens[y].to_string(form.basis()) +
                                    "] = " + xy.to_string(form.basis());
          if (auto w = compare(lhs, fock::commutator(m[x], m[y]), where)) return w;
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("llv.sl2_triple", "act(e∧f) = h, [e_α, f_α] = (α, α) h", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const Matrix h = mat(ctx, ops::op_h(r, n), n);
      const auto ef = ops::GnsElement::wedge(ops::MukaiBasis::e(), ops::MukaiBasis::f());
      if (auto w = compare(mat(ctx, ops::op_act(r, ef, n), n), h, "act(e∧f)")) return w;
      const auto ds = divisors(r);
      for (std::size_t j = 0; j < ds.size(); ++j) {
        const Matrix lhs = bracket(ctx, ops::op_e_alpha(r, ds[j], n), ops::op_f_alpha(r, ds[j], n), n);
        const Rational aa = r.lattice().pairing(static_cast<int>(j), static_cast<int>(j));
        if (auto w = compare(lhs, aa * h, "α=" + str(ds[j]))) return w;
      }
      return std::nullopt;
    }));
    out.push_back(make_check("llv.h_alpha_delta_forms",
                             "-1/2 Σ_{i+j+k=0} (1/k) :q_i q_j q_k(Δ_12 (α_1 + α_3)): = Σ_{k≠0} (1/k) :L_k q_{-k}(α_1 + α_2):",
                             {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      for (const auto& a : divisors(r)) {
        const Matrix lhs = mat(ctx, ops::op_h_alpha_delta(r, a, n), n);
        const Matrix rhs = mat(ctx, ops::op_h_alpha_delta_virasoro(r, a, n), n);
        if (auto w = compare(lhs, rhs, "α=" + str(a))) return w;
      }
      return std::nullopt;
    }));
    out.push_back(make_check("llv.e_alpha", "e_α = G_2(α)", {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      for (const auto& a : divisors(r)) {
        const Matrix lhs = mat(ctx, ops::op_e_alpha(r, a, n), n);
        if (auto w = compare(lhs, mat(ctx, ops::op_G(r, 2, a, n), n), "α=" + str(a))) return w;
      }
      return std::nullopt;
    }));
  }
  for (int n = 2; n <= 3; ++n) {
    out.push_back(make_check("llv.e_delta", "e_δ = G_3(1)", {{"n", n}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      return compare(mat(ctx, ops::op_e_delta(r, n), n), mat(ctx, ops::op_G(r, 3, one1(), n), n),
                     "level " + std::to_string(n));
    }));
  }
  for (int n = 0; n <= 5; ++n) {
    out.push_back(make_check("llv.fundamental_class", "h(1_n) = -n 1_n, h_αβ(1_n) = h_αδ(1_n) = 0", {{"n", n}},
                             [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const fock::FockVector one = ops::fundamental_class(n);
      const fock::FockVector zero(n);
      if (auto w = compare(ops::op_h(r, n).apply(r, one), Rational(-n) * one, "h", "1_" + std::to_string(n))) return w;
      const auto ds = divisors(r);
      for (const auto& a : ds) {
        for (const auto& b : ds) {
          const auto v = ops::op_h_alpha_beta(r, a, b, n).apply(r, one);
          if (auto w = compare(v, zero, "h_αβ with α=" + str(a) + " β=" + str(b), "1_" + std::to_string(n))) return w;
        }
        const auto v = ops::op_h_alpha_delta(r, a, n).apply(r, one);
        if (auto w = compare(v, zero, "h_αδ with α=" + str(a), "1_" + std::to_string(n))) return w;
      }
      return std::nullopt;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// commutators: operator brackets

/// Non-increasing words of the given length over {2, 1, -1, -2}.
std::vector<fock::Word> short_words(int len) {
  const std::vector<int> letters{2, 1, -1, -2};
  std::vector<fock::Word> out;
  fock::Word w;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      w.push_back(letters[i]);
      self(self, i);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int word_weight(const fock::Word& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

std::string word_str(const fock::Word& w) {
  std::string s = "q";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

/// Pairs (α, β) of divisor basis classes with α before or equal to β.
std::vector<std::pair<SurfaceClass, SurfaceClass>> divisor_pairs(const taut::TautRing& r) {
  const auto ds = divisors(r);
  std::vector<std::pair<SurfaceClass, SurfaceClass>> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i; j < ds.size(); ++j) out.emplace_back(ds[i], ds[j]);
  }
  return out;
}

Rational integral(const taut::TautRing& r, const SurfaceClass& g, const SurfaceClass& x) {
  return integrate_all(r.mul(g, x));
}

std::vector<Check> operator_commutator_checks() {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    out.push_back(make_check("commutators.grading", "[h, G_d(γ)] = G_d((d-1)γ + ∫_• γ_•(c - c_•))",
                             {{"n", n}, {"d", 4}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const OpExpr h = ops::op_h(r, n);
      for (int d = 2; d <= 4; ++d) {
        for (const auto& g : basis_classes(r, 1)) {
          const Matrix lhs = bracket(ctx, h, ops::op_G(r, d, g, n), n);
          const SurfaceClass shifted = Rational(d - 1) * g + ops::bar(r, g, {0});
          if (auto w = compare(lhs, mat(ctx, ops::op_G(r, d, shifted, n), n), inst({{"d", num(d)}, {"γ", str(g)}}))) {
            return w;
          }
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("commutators.grading_lqw", "[h, J_0^d(γ)] = J_0^d(dγ + ∫_* γ_*(c - c_*))",
                             {{"n", n}, {"d", 3}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const OpExpr h = ops::op_h(r, n);
      for (int d = 1; d <= 3; ++d) {
        for (const auto& g : basis_classes(r, 1)) {
          const Matrix lhs = bracket(ctx, h, ops::op_J(r, 0, d, g, n), n);
          const SurfaceClass shifted = Rational(d) * g + ops::bar(r, g, {0});
          if (auto w = compare(lhs, mat(ctx, ops::op_J(r, 0, d, shifted, n), n), inst({{"d", num(d)}, {"γ", str(g)}}))) {
            return w;
          }
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("commutators.alpha_beta", "[h_αβ, G_d(γ)] = G_d(∫_• γ_•(αβ_• - α_•β))",
                             {{"n", n}, {"d", 4}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      for (const auto& [a, b] : divisor_pairs(r)) {
        const OpExpr hab = ops::op_h_alpha_beta(r, a, b, n);
        for (int d = 2; d <= 4; ++d) {
          for (const auto& g : basis_classes(r, 1)) {
            const Matrix lhs = bracket(ctx, hab, ops::op_G(r, d, g, n), n);
            const SurfaceClass shifted = ops::double_bar(r, g, {0}, a, b);
            if (auto w = compare(lhs, mat(ctx, ops::op_G(r, d, shifted, n), n),
                                 inst({{"α", str(a)}, {"β", str(b)}, {"d", num(d)}, {"γ", str(g)}}))) {
              return w;
            }
          }
        }
      }
      return std::nullopt;
    }));
    out.push_back(make_check("commutators.alpha_delta",
                             "[h_αδ, G_d(γ)] = -G_2(α) G_{d-1}(γ) - G_2(1) G_{d-1}(γα) - G_{d+1}(α ∫_• γ_• + ∫_• γ_• α_•)"
                             " + 2 G_{d-1}(α ∫_• γ_• c_•)",
                             {{"n", n}, {"d", 4}}, [n](const Context& ctx) -> MaybeWitness {
      const auto& r = ctx.space.ring();
      const SurfaceClass c = r.point(1, 0);
      for (const auto& a : divisors(r)) {
        const OpExpr had = ops::op_h_alpha_delta(r, a, n);
        for (int d = 2; d <= 4; ++d) {
          for (const auto& g : basis_classes(r, 1)) {
            const Matrix lhs = bracket(ctx, had, ops::op_G(r, d, g, n), n);
            OpExpr rhs = Rational(-1) * compose(ops::op_G(r, 2, a, n), ops::op_G(r, d - 1, g, n));
            rhs -= compose(ops::op_G(r, 2, one1(), n), ops::op_G(r, d - 1, r.mul(g, a), n));
            rhs -= ops::op_G(r, d + 1, integrate_all(g) * a + integral(r, g, a) * one1(), n);
            rhs += Rational(2) * ops::op_G(r, d - 1, integral(r, g, c) * a, n);
            if (auto w = compare(lhs, mat(ctx, rhs, n), inst({{"α", str(a)}, {"d", num(d)}, {"γ", str(g)}}))) return w;
          }
        }
      }
      return std::nullopt;
    }));
    for (int len = 1; len <= 3; ++len) {
      out.push_back(make_check("commutators.bar_words",
                               "[h, q_{λ_1}...q_{λ_k}(Φ)] = q_{λ_1}...q_{λ_k}(Σ_i ∫_• Φ_{1...i-1,•,i+1...k}(c_i - c_•))",
                               {{"n", n}, {"len", len}}, [n, len](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        for (const auto& w : short_words(len)) {
          const int wt = word_weight(w);
          if (n + wt < 0) continue;
          const OpExpr h = ops::op_h(r, std::max(n, n + wt));
          for (const auto& phi : basis_classes(r, len)) {
            const Matrix lhs = bracket(ctx, h, ops::op_q(w, phi), n);
            const Matrix rhs = mat(ctx, ops::op_q(w, ops::bar(r, phi, ops::leading(len))), n);
            if (auto wit = compare(lhs, rhs, inst({{"word", word_str(w)}, {"Φ", str(phi)}}))) return wit;
          }
        }
        return std::nullopt;
      }));
      out.push_back(make_check(
          "commutators.double_bar_words",
          "[h_αβ, q_{λ_1}...q_{λ_k}(Φ)] = q_{λ_1}...q_{λ_k}(Σ_i ∫_• Φ_{1...i-1,•,i+1...k}(α_i β_• - α_• β_i))",
          {{"n", n}, {"len", len}}, [n, len](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            for (const auto& [a, b] : divisor_pairs(r)) {
              for (const auto& w : short_words(len)) {
                const int wt = word_weight(w);
                if (n + wt < 0) continue;
                const OpExpr hab = ops::op_h_alpha_beta(r, a, b, std::max(n, n + wt));
                for (const auto& phi : basis_classes(r, len)) {
                  const Matrix lhs = bracket(ctx, hab, ops::op_q(w, phi), n);
                  const Matrix rhs = mat(ctx, ops::op_q(w, ops::double_bar(r, phi, ops::leading(len), a, b)), n);
                  if (auto wit = compare(lhs, rhs, inst({{"α", str(a)}, {"β", str(b)}, {"word", word_str(w)}, {"Φ", str(phi)}}))) {
                    return wit;
                  }
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
// commutators: ring identities

std::vector<Check> ring_claim_checks() {
  std::vector<Check> out;
  for (int k = 1; k <= 4; ++k) {
    for (int l = 0; l <= 1; ++l) {
      out.push_back(make_check("commutators.bar_diagonal",
                               "bar(Δ_{1...k} γ_1) = Δ_{1...k}[(k-1)γ_1 + ∫_* γ_*(c_1 - c_*)]", {{"k", k}, {"l", l}},
                               [k, l](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        const SurfaceClass c = r.point(1, 0);
        for (const auto& g : basis_classes(r, 1 + l)) {
          const SurfaceClass lhs = ops::bar(r, ops::diagonal_times(r, k, ops::leading(k), g, 0), ops::leading(k));
          const SurfaceClass inner = Rational(k - 1) * g +
                                     r.mul(r.point(1 + l, 0), trailing(ops::integrate_first(g), 1)) -
                                     trailing(ops::integrate_first(r.mul(g, widen(c, 1 + l))), 1);
          if (auto w = compare(lhs, ops::diagonal_times(r, k, ops::leading(k), inner, 0), "γ=" + str(g))) return w;
        }
        return std::nullopt;
      }));
      out.push_back(make_check("commutators.double_bar_diagonal",
                               "double bar(Δ_{1...k} γ_1) = Δ_{1...k} ∫_* γ_*(α_1 β_* - α_* β_1)", {{"k", k}, {"l", l}},
                               [k, l](const Context& ctx) -> MaybeWitness {
        const auto& r = ctx.space.ring();
        for (const auto& [a, b] : divisor_pairs(r)) {
          for (const auto& g : basis_classes(r, 1 + l)) {
            const SurfaceClass lhs =
                ops::double_bar(r, ops::diagonal_times(r, k, ops::leading(k), g, 0), ops::leading(k), a, b);
            const SurfaceClass inner =
                r.mul(widen(a, 1 + l), trailing(ops::integrate_first(r.mul(g, widen(b, 1 + l))), 1)) -
                r.mul(widen(b, 1 + l), trailing(ops::integrate_first(r.mul(g, widen(a, 1 + l))), 1));
            if (auto w = compare(lhs, ops::diagonal_times(r, k, ops::leading(k), inner, 0),
                                 inst({{"α", str(a)}, {"β", str(b)}, {"γ", str(g)}}))) {
              return w;
            }
          }
        }
        return std::nullopt;
      }));
    }
  }
  for (int l = 0; l <= 1; ++l) {
    for (int kk = 3; kk <= 5; ++kk) {
        out.push_back(make_check("commutators.cycle_difference",
                                 "A_k(γ) - (k-2) B_k(γ) = Δ_{1...k}(α_1 ∫_• γ_• + ∫_• α_• γ_•)", {{"k", kk}, {"l", l}},
                                 [kk, l](const Context& ctx) -> MaybeWitness {
          const auto& r = ctx.space.ring();
          for (const auto& a : divisors(r)) {
            for (const auto& g : basis_classes(r, 1 + l)) {
              const SurfaceClass lhs = ops::cycle_a(r, kk, g, a) - Rational(kk - 2) * ops::cycle_b(r, kk, g, a);
              const SurfaceClass inner = r.mul(widen(a, 1 + l), trailing(ops::integrate_first(g), 1)) +
                                         trailing(ops::integrate_first(r.mul(g, widen(a, 1 + l))), 1);
              if (auto w = compare(lhs, ops::diagonal_times(r, kk, ops::leading(kk), inner, 0),
                                   inst({{"α", str(a)}, {"γ", str(g)}}))) {
                return w;
              }
            }
          }
          return std::nullopt;
        }));
    }
    // A_k needs k >= 3, B_k only k >= 2.
    for (int kk = 2; kk <= 5; ++kk) {
        out.push_back(make_check("commutators.cycle_point",
                                 "A_k(γc) = (k-1) Δ_{1...k} α_1 ∫_• γ_• c_•, B_k(γc) = Δ_{1...k} α_1 ∫_• γ_• c_•",
                                 {{"k", kk}, {"l", l}}, [kk, l](const Context& ctx) -> MaybeWitness {
          const auto& r = ctx.space.ring();
          const SurfaceClass c = r.point(1, 0);
          for (const auto& a : divisors(r)) {
            for (const auto& g : basis_classes(r, 1 + l)) {
              const SurfaceClass gc = r.mul(g, widen(c, 1 + l));
              const SurfaceClass base = ops::diagonal_times(
                  r, kk, ops::leading(kk), r.mul(widen(a, 1 + l), trailing(ops::integrate_first(gc), 1)), 0);
              if (kk >= 3) {
                if (auto w = compare(ops::cycle_a(r, kk, gc, a), Rational(kk - 1) * base,
                                     inst({{"cycle", "A"}, {"α", str(a)}, {"γ", str(g)}}))) {
                  return w;
                }
              }
              if (auto w = compare(ops::cycle_b(r, kk, gc, a), base, inst({{"cycle", "B"}, {"α", str(a)}, {"γ", str(g)}}))) {
                return w;
              }
            }
          }
          return std::nullopt;
        }));
        out.push_back(make_check("commutators.cycle_expansion",
                                 "A_k(γ) = (k-2) Σ_{i≠j} α_i γ_j Π_{s≠i,j} c_s - (k-1)(k-3)(Σ_i α_i Π_{j≠i} c_j) ∫_• γ_• + ..., "
                                 "B_k(γ) = Σ_{i≠j} α_i γ_j Π_{s≠i,j} c_s - (k-2)(Σ_i α_i Π_{j≠i} c_j) ∫_• γ_• + ...",
                                 {{"k", kk}, {"l", l}}, [kk, l](const Context& ctx) -> MaybeWitness {
          const auto& r = ctx.space.ring();
          for (const auto& a : divisors(r)) {
            for (const auto& g : basis_classes(r, 1 + l)) {
              if (kk >= 3) {
                if (auto w = compare(ops::cycle_a(r, kk, g, a), ops::cycle_a_expanded(r, kk, g, a),
                                     inst({{"cycle", "A"}, {"α", str(a)}, {"γ", str(g)}}))) {
                  return w;
                }
              }
              if (auto w = compare(ops::cycle_b(r, kk, g, a), ops::cycle_b_expanded(r, kk, g, a),
                                   inst({{"cycle", "B"}, {"α", str(a)}, {"γ", str(g)}}))) {
                return w;
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
// commutators: normal-ordered insertion identities

/// Δ_{1...K} x_1 on S^K with the first index of x at 0.
SurfaceClass full_diagonal(const taut::TautRing& r, int K, const SurfaceClass& x) {
  return ops::diagonal_times(r, K, ops::leading(K), x, 0);
}

/// Σ_i Δ_{[K]-i} x_{≠i} y_i on S^K.
SurfaceClass single_insertions(const taut::TautRing& r, int K, const SurfaceClass& x, const SurfaceClass& y) {
  SurfaceClass out(K);
  for (int i = 0; i < K; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < K; ++j) {
      if (j != i) rest.push_back(j);
    }
    out += r.mul(ops::diagonal_times(r, K, rest, x, rest.front()), ops::place(y, i, K));
  }
  return out;
}

/// Σ_{i<j} Δ_{[K]-{i,j}} x_{≠i,j} Δ_ij y_i on S^K.
SurfaceClass pair_insertions(const taut::TautRing& r, int K, const SurfaceClass& x, const SurfaceClass& y) {
  SurfaceClass out(K);
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      std::vector<int> rest;
      for (int s = 0; s < K; ++s) {
        if (s != i && s != j) rest.push_back(s);
      }
      const SurfaceClass d = r.mul(r.diagonal(K, i, j), ops::place(y, i, K));
      out += r.mul(ops::diagonal_times(r, K, rest, x, rest.front()), d);
    }
  }
  return out;
}

/// Adds coef · :q_w(cls): to op.
void add_ordered(Operator& op, const fock::Word& w, const SurfaceClass& cls, const Rational& coef) {
  if (coef == 0 || cls.is_zero()) return;
  auto [nw, ncls] = fock::normal_ordered(w, cls);
  op.add_term(nw, coef * ncls);
}

fock::Word concat(fock::Word a, const fock::Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Σ_k Σ_{|λ|=k, l=len} weight(λ,k)/λ! :q_λ(Δ_{1...len} x_1) q_{-k}(y):, exact up to level n.
template <class Weight>
Operator trailing_insertion(const taut::TautRing& r, int len, const SurfaceClass& x, const SurfaceClass& y, int n,
                            Weight weight) {
  Operator op(0, 0);
  const SurfaceClass lam = widen(full_diagonal(r, len, x), len + 1);
  const SurfaceClass cls = r.mul(lam, ops::place(y, len, len + 1));
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    for (const auto& p : ops::signed_partitions(k, len, n)) {
      add_ordered(op, concat(p.letters, {-k}), cls, weight(p, k) * p.inv_factorial);
    }
  }
  return ops::truncate(op, n);
}

/// Σ_{|μ|=0, l=len} weight(μ)/μ! q_μ(cls).
template <class Weight>
Operator balanced_sum(int len, const SurfaceClass& cls, int n, Weight weight) {
  Operator op(0, 0);
  for (const auto& p : ops::signed_partitions(0, len, n)) add_ordered(op, p.letters, cls, weight(p) * p.inv_factorial);
  return op;
}

/// Σ_k Σ_{|λ|=-k, l=len} weight(λ,k)/λ! :L_k(y) q_λ(Δ_{1...len} x_1):, with L_k
/// to the left for k > 0, to the right for k < 0 and symmetrized for k = 0.
template <class Weight>
OpExpr virasoro_insertion(const taut::TautRing& r, int len, const SurfaceClass& x, const SurfaceClass& y, int n,
                          Weight weight) {
  OpExpr out(Operator(0, 0));
  const SurfaceClass cls = full_diagonal(r, len, x);
  for (int k = -n; k <= n; ++k) {
    Operator xs;
    for (const auto& p : ops::signed_partitions(-k, len, n)) {
      const Rational coef = weight(p, k) * p.inv_factorial;
      if (coef != 0) xs += coef * Operator::term(p.letters, cls);
    }
    if (xs.is_zero()) continue;
    const OpExpr l = ops::op_L(r, k, y, n);
    if (k > 0) {
      out += compose(l, OpExpr(xs));
    } else if (k < 0) {
      out += compose(OpExpr(xs), l);
    } else {
      out += rational(1, 2) * (compose(l, OpExpr(xs)) + compose(OpExpr(xs), l));
    }
  }
  return out;
}

/// Σ_{i,j} Σ_{|λ|=-i-j, l=len} weight(i,j)/λ! :q_i q_j(Δ_12 y_1) q_λ(Δ_{1...len} x_1):.
template <class Weight>
Operator pair_product(const taut::TautRing& r, int len, const SurfaceClass& x, const SurfaceClass& y, int n,
                      Weight weight) {
  Operator op(0, 0);
  const SurfaceClass head = r.mul(r.diagonal(2, 0, 1), ops::place(y, 0, 2));
  const SurfaceClass cls = exterior(head, full_diagonal(r, len, x));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      if (i == 0 || j == 0) continue;
      for (const auto& p : ops::signed_partitions(-i - j, len, n)) {
        add_ordered(op, concat({i, j}, p.letters), cls, weight(i, j) * p.inv_factorial);
      }
    }
  }
  return ops::truncate(op, n);
}

using XY = std::pair<SurfaceClass, SurfaceClass>;

std::vector<XY> insertion_pairs(const taut::TautRing& r, const SurfaceClass& a) {
  (void)r;
  return {{a, one1()}, {one1(), a}};
}

std::string xy_str(const XY& xy) { return "(x,y)=(" + str(xy.first) + "," + str(xy.second) + ")"; }

std::vector<Check> insertion_checks() {
  std::vector<Check> out;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      out.push_back(make_check(
          "commutators.insertion",
          "Σ_k Σ_{|λ|=k, l(λ)=d+1} (1/λ!) :q_λ(Δ_{1...d+1}(xγ)_1) q_{-k}(y): = "
          "Σ_{|μ|=0, l(μ)=d+2} (1/μ!) q_μ(Σ_i Δ_{1...î...d+2}(xγ)_{≠i} y_i)",
          {{"n", n}, {"d", d}}, [n, d](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            for (const auto& a : divisors(r)) {
              for (const auto& xy : insertion_pairs(r, a)) {
                for (const auto& g : basis_classes(r, 1)) {
                  const SurfaceClass xg = r.mul(xy.first, g);
                  const Operator lhs = trailing_insertion(r, d + 1, xg, xy.second, n,
                                                          [](const ops::SignedPartition&, int) { return Rational(1); });
                  const Operator rhs = balanced_sum(d + 2, single_insertions(r, d + 2, xg, xy.second), n,
                                                    [](const ops::SignedPartition&) { return Rational(1); });
                  if (auto w = compare(mat(ctx, lhs, n), mat(ctx, rhs, n), xy_str(xy) + " γ=" + str(g))) return w;
                }
              }
            }
            return std::nullopt;
          }));
    }
    for (int d = 2; d <= 4; ++d) {
      out.push_back(make_check(
          "commutators.insertion_point",
          "Σ_k Σ_{|λ|=k, l(λ)=d-1} (s(λ)+k^2-2)/λ! :q_λ(Δ_{1...d-1}(xγc)_1) q_{-k}(y): = "
          "Σ_{|μ|=0, l(μ)=d} (s(μ)-2)/μ! q_μ(Σ_i Δ_{1...î...d}(xγc)_{≠i} y_i)",
          {{"n", n}, {"d", d}}, [n, d](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            const SurfaceClass c = r.point(1, 0);
            for (const auto& a : divisors(r)) {
              for (const auto& xy : insertion_pairs(r, a)) {
                for (const auto& g : basis_classes(r, 1)) {
                  const SurfaceClass xgc = r.mul(r.mul(xy.first, g), c);
                  const Operator lhs = trailing_insertion(r, d - 1, xgc, xy.second, n,
                                                          [](const ops::SignedPartition& p, int k) {
                                                            return Rational(p.s + static_cast<long>(k) * k - 2);
                                                          });
                  const Operator rhs = balanced_sum(d, single_insertions(r, d, xgc, xy.second), n,
                                                    [](const ops::SignedPartition& p) { return Rational(p.s - 2); });
                  if (auto w = compare(mat(ctx, lhs, n), mat(ctx, rhs, n), xy_str(xy) + " γ=" + str(g))) return w;
                }
              }
            }
            return std::nullopt;
          }));
    }
    for (int d = 1; d <= 3; ++d) {
      out.push_back(make_check(
          "commutators.virasoro_insertion",
          "Σ_k Σ_{|λ|=-k, l(λ)=d} (1/λ!) :L_k(y) q_λ(Δ_{1...d}(xγ)_1): = "
          "Σ_{|μ|=0, l(μ)=d+2} (1/μ!) q_μ(Σ_{i<j} Δ_{1...î...ĵ...d+2}(xγ)_{≠i,j} Δ_ij y_i) "
          "- Σ_{|μ|=0, l(μ)=d} s(μ)/(2μ!) q_μ(Δ_{1...d}(xyγ)_1)",
          {{"n", n}, {"d", d}}, [n, d](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            for (const auto& a : divisors(r)) {
              for (const auto& xy : insertion_pairs(r, a)) {
                for (const auto& g : basis_classes(r, 1)) {
                  const SurfaceClass xg = r.mul(xy.first, g);
                  const OpExpr lhs = virasoro_insertion(r, d, xg, xy.second, n,
                                                        [](const ops::SignedPartition&, int) { return Rational(1); });
                  Operator rhs = balanced_sum(d + 2, pair_insertions(r, d + 2, xg, xy.second), n,
                                              [](const ops::SignedPartition&) { return Rational(1); });
                  rhs -= balanced_sum(d, full_diagonal(r, d, r.mul(xg, xy.second)), n,
                                      [](const ops::SignedPartition& p) { return rational(p.s, 2); });
                  if (auto w = compare(mat(ctx, lhs, n), mat(ctx, rhs, n), xy_str(xy) + " γ=" + str(g))) return w;
                }
              }
            }
            return std::nullopt;
          }));
    }
    for (int d = 3; d <= 4; ++d) {
      out.push_back(make_check(
          "commutators.virasoro_insertion_point",
          "Σ_k Σ_{|λ|=-k, l(λ)=d-2} (s(λ)+k^2-2)/λ! :L_k(y) q_λ(Δ_{1...d-2}(xcγ)_1): = "
          "Σ_{|μ|=0, l(μ)=d} (s(μ)-2)/μ! q_μ(Σ_{i<j} Δ_{1...î...ĵ...d}(xcγ)_{≠i,j} Δ_ij y_i) "
          "+ Σ_{i,j} Σ_{|λ|=-i-j, l(λ)=d-2} (ij/λ!) :q_i q_j(Δ_12 y_1) q_λ(Δ_{1...d-2}(xcγ)_1):",
          {{"n", n}, {"d", d}}, [n, d](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            const SurfaceClass c = r.point(1, 0);
            for (const auto& a : divisors(r)) {
              for (const auto& xy : insertion_pairs(r, a)) {
                for (const auto& g : basis_classes(r, 1)) {
                  const SurfaceClass xcg = r.mul(r.mul(xy.first, c), g);
                  const OpExpr lhs = virasoro_insertion(r, d - 2, xcg, xy.second, n,
                                                        [](const ops::SignedPartition& p, int k) {
                                                          return Rational(p.s + static_cast<long>(k) * k - 2);
                                                        });
                  Operator rhs = balanced_sum(d, pair_insertions(r, d, xcg, xy.second), n,
                                              [](const ops::SignedPartition& p) { return Rational(p.s - 2); });
                  rhs += pair_product(r, d - 2, xcg, xy.second, n, [](int i, int j) { return Rational(i * j); });
                  if (auto w = compare(mat(ctx, lhs, n), mat(ctx, rhs, n), xy_str(xy) + " γ=" + str(g))) return w;
                }
              }
            }
            return std::nullopt;
          }));
      out.push_back(make_check(
          "commutators.point_lines",
          "-Σ_{(x,y)} Σ_{i,j} Σ_{|λ|=-i-j, l(λ)=d-2} (ij/λ!) :q_i q_j(Δ_12 y_1) q_λ(Δ_{1...d-2}(xcγ)_1): "
          "- Σ_{(x,y)} Σ_k Σ_{|λ|=k, l(λ)=d-1} 2(k^2-1)/λ! :q_λ(Δ_{1...d-1}(xcγ)_1) q_{-k}(y): = "
          "2 Σ_{|μ|=0, l(μ)=d} (1/μ!) q_μ(Σ_i Δ_{1...î...d}(cγ)_{≠i} α_i)",
          {{"n", n}, {"d", d}}, [n, d](const Context& ctx) -> MaybeWitness {
            const auto& r = ctx.space.ring();
            const SurfaceClass c = r.point(1, 0);
            for (const auto& a : divisors(r)) {
              for (const auto& g : basis_classes(r, 1)) {
                Operator lhs(0, 0);
                for (const auto& xy : insertion_pairs(r, a)) {
                  const SurfaceClass xcg = r.mul(r.mul(xy.first, c), g);
                  lhs -= pair_product(r, d - 2, xcg, xy.second, n, [](int i, int j) { return Rational(i * j); });
                  lhs -= trailing_insertion(r, d - 1, xcg, xy.second, n, [](const ops::SignedPartition&, int k) {
                    return Rational(2 * (static_cast<long>(k) * k - 1));
                  });
                }
                const Operator rhs = balanced_sum(d, single_insertions(r, d, r.mul(c, g), a), n,
                                                  [](const ops::SignedPartition&) { return Rational(2); });
                if (auto w = compare(mat(ctx, lhs, n), mat(ctx, rhs, n), "α=" + str(a) + " γ=" + str(g))) return w;
              }
            }
            return std::nullopt;
          }));
    }
  }
  return out;
}

}  // namespace

std::vector<Check> lie_suite(const std::string& suite) {
  if (suite == "lqw") return lqw_checks();
  if (suite == "llv") return llv_checks();
  if (suite == "commutators") {
    auto out = operator_commutator_checks();
    for (auto& c : ring_claim_checks()) out.push_back(std::move(c));
    for (auto& c : insertion_checks()) out.push_back(std::move(c));
    return out;
  }
  return {};
}

}  // namespace k3fock::verify::detail
