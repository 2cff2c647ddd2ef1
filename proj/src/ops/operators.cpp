#include "k3fock/ops/operators.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "k3fock/faults.hpp"

namespace k3fock::ops {

using fock::Operator;
using fock::Partition;
using fock::Word;
using taut::SurfaceClass;

namespace {

/// a (arity 1) placed on index i of S^k.
SurfaceClass at(const SurfaceClass& a, int i, int k) { return pullback(a, {i}, k); }

SurfaceClass all_diagonal(const taut::TautRing& ring, int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return ring.small_diagonal(k, idx);
}

/// Ordered triples (i, j, k) of nonzero letters with i + j + k = 0 whose
/// normal ordering has annihilation weight <= n.
std::vector<std::array<int, 3>> zero_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const int k = -i - j;
      if (i == 0 || j == 0 || k == 0 || k < -n || k > n) continue;
      const int ann = (i < 0 ? -i : 0) + (j < 0 ? -j : 0) + (k < 0 ? -k : 0);
      if (ann <= n) out.push_back({i, j, k});
    }
  }
  return out;
}

Operator cubic(const taut::TautRing& ring, int n,
               const std::function<SurfaceClass(int, int, int)>& cls, const Rational& scale) {
  Operator out(0, 0);
  for (const auto& [i, j, k] : zero_triples(n)) {
    const auto [w, c] = fock::normal_ordered({i, j, k}, cls(i, j, k));
    out.add_term(w, c * scale);
  }
  (void)ring;
  return out;
}

Rational z_factor(const Partition& p) {
  if (!fault_active(Fault::kDropAutomorphismFactor)) return Rational(p.z());
  long prod = 1;
  for (int x : p.parts()) prod *= x;
  return Rational(prod);
}

/// Appends q_λ q_{-λ}(π) letters to w and the pair classes to the list.
void append_pairs(const Partition& lambda, const SurfaceClass& pi, Word& w,
                  std::vector<std::pair<std::array<int, 2>, SurfaceClass>>& pairs) {
  const int base = static_cast<int>(w.size());
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) w.push_back(lambda[i]);
  for (int i = 0; i < l; ++i) w.push_back(-lambda[i]);
  for (int i = 0; i < l; ++i) pairs.push_back({{base + i, base + l + i}, pi});
}

SurfaceClass pair_product(const taut::TautRing& ring, int arity,
                          const std::vector<std::pair<std::array<int, 2>, SurfaceClass>>& pairs) {
  SurfaceClass out = SurfaceClass::one(arity);
  for (const auto& [ab, pi] : pairs) out = ring.mul(out, pullback(pi, {ab[0], ab[1]}, arity));
  return out;
}

}  // namespace

std::vector<SignedPartition> signed_partitions(int total, int length, int max_ann) {
  std::vector<SignedPartition> out;
  if (length < 0) return out;
  for (int a = 0; a <= length; ++a) {
    for (int ann = 0; ann <= max_ann; ++ann) {
      const int cre = total + ann;
      if (cre < 0) continue;
      for (const auto& neg : fock::partitions_of(ann, a)) {
        for (const auto& pos : fock::partitions_of(cre, length - a)) {
          SignedPartition sp;
          sp.letters = pos.parts();
          for (int i = neg.length() - 1; i >= 0; --i) sp.letters.push_back(-neg[i]);
          sp.inv_factorial = Rational(1, pos.aut_order() * neg.aut_order());
          sp.s = pos.s() + neg.s();
          out.push_back(std::move(sp));
        }
      }
    }
  }
  return out;
}

OpExpr op_q(const Word& w, const SurfaceClass& gamma) {
  if (gamma.arity() != static_cast<int>(w.size())) throw std::invalid_argument("class arity differs from word length");
  return OpExpr(Operator::term(w, gamma));
}

OpExpr op_h(const taut::TautRing& ring, int n) {
  Operator out(0, 0);
  const SurfaceClass cls = ring.point(2, 1) - ring.point(2, 0);
  for (int k = 1; k <= n; ++k) out.add_term({k, -k}, cls * rational(1, k));
  return out;
}

OpExpr op_h_tilde(const taut::TautRing& ring, int n) {
  return op_h(ring, n) + Rational(n) * OpExpr::identity();
}

OpExpr op_h_alpha_beta(const taut::TautRing& ring, const SurfaceClass& alpha, const SurfaceClass& beta, int n) {
  Operator out(0, 0);
  const SurfaceClass cls = exterior(beta, alpha) - exterior(alpha, beta);
  (void)ring;
  for (int k = 1; k <= n; ++k) out.add_term({k, -k}, cls * rational(1, k));
  return out;
}

OpExpr op_h_alpha_delta(const taut::TautRing& ring, const SurfaceClass& alpha, int n) {
  const SurfaceClass cls = ring.mul(ring.diagonal(3, 0, 1), at(alpha, 0, 3) + at(alpha, 2, 3));
  Operator out(0, 0);
  for (const auto& [i, j, k] : zero_triples(n)) {
    const auto [w, c] = fock::normal_ordered({i, j, k}, cls);
    out.add_term(w, c * rational(-1, 2 * k));
  }
  return out;
}

OpExpr op_h_alpha_delta_virasoro(const taut::TautRing& ring, const SurfaceClass& alpha, int n) {
  const SurfaceClass one = SurfaceClass::one(1);
  const SurfaceClass ends = exterior(alpha, one) + exterior(one, alpha);
  Operator out(0, 0);
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    const Operator prod = compose(slot_L(ring, k, n), slot_q(ring, -k)).contract_external(ring, ends);
    Operator term = truncate(normal_order(prod), n);
    term *= rational(1, k);
    out += term;
  }
  return out;
}

OpExpr op_e_alpha(const taut::TautRing& ring, const SurfaceClass& alpha, int n) {
  Operator out(0, 0);
  const SurfaceClass cls = ring.mul(ring.diagonal(2, 0, 1), at(alpha, 0, 2));
  for (int k = 1; k <= n; ++k) out.add_term({k, -k}, -cls);
  return out;
}

OpExpr op_e_delta(const taut::TautRing& ring, int n) {
  const SurfaceClass d = all_diagonal(ring, 3);
  return cubic(ring, n, [&](int, int, int) { return d; }, rational(-1, 6));
}

OpExpr op_f_alpha(const taut::TautRing& ring, const SurfaceClass& alpha, int n) {
  Operator out(0, 0);
  (void)ring;
  const SurfaceClass cls = at(alpha, 0, 2) + at(alpha, 1, 2);
  for (int k = 1; k <= n; ++k) out.add_term({k, -k}, cls * rational(-1, k * k));
  return out;
}

OpExpr op_f_delta(const taut::TautRing& ring, int n) {
  const SurfaceClass d12 = ring.diagonal(3, 0, 1);
  const SurfaceClass d13 = ring.diagonal(3, 0, 2);
  const SurfaceClass d23 = ring.diagonal(3, 1, 2);
  const SurfaceClass c1 = ring.point(3, 0);
  const SurfaceClass c2 = ring.point(3, 1);
  const SurfaceClass c3 = ring.point(3, 2);
  auto cls = [&](int i, int j, int k) {
    return d12 * rational(1, k * k) + d13 * rational(1, j * j) + d23 * rational(1, i * i) +
           c1 * rational(2, j * k) + c2 * rational(2, i * k) + c3 * rational(2, i * j);
  };
  return cubic(ring, n, cls, rational(-1, 6));
}

Operator slot_q(const taut::TautRing& ring, int k) { return Operator::term({k}, ring.diagonal(2, 0, 1)); }

Operator slot_L(const taut::TautRing& ring, int k, int n) {
  Operator out(k, 1);
  const SurfaceClass d = all_diagonal(ring, 3);
  for (const auto& sp : signed_partitions(k, 2, n)) out.add_term(sp.letters, d * sp.inv_factorial);
  return out;
}

Operator slot_J(const taut::TautRing& ring, int k, int d, int n) {
  if (d < 0) throw std::invalid_argument("J needs d >= 0");
  Operator out(k, 1);
  const Rational fact = factorial(d);
  const SurfaceClass first = all_diagonal(ring, d + 2);
  for (const auto& sp : signed_partitions(k, d + 1, n)) {
    out.add_term(sp.letters, first * Rational(-fact * sp.inv_factorial));
  }
  if (d >= 2 && !fault_active(Fault::kDropLqwPointTerm)) {
    const SurfaceClass second = ring.mul(all_diagonal(ring, d), ring.point(d, d - 1));
    for (const auto& sp : signed_partitions(k, d - 1, n)) {
      const Rational coef = fact * Rational(sp.s + static_cast<long>(k) * k - 2) * sp.inv_factorial;
      out.add_term(sp.letters, second * coef);
    }
  }
  return out;
}

Operator slot_G(const taut::TautRing& ring, int d, int n) {
  Operator out(0, 1);
  if (d <= 1) return out;
  Operator first = slot_J(ring, 0, d - 1, n);
  first *= Rational(1) / factorial(d - 1);
  out += first;
  if (d >= 3) {
    Operator second = times_external(ring, slot_J(ring, 0, d - 3, n), ring.point(1, 0));
    second *= Rational(-2) / factorial(d - 3);
    out += second;
  }
  return out;
}

OpExpr op_L(const taut::TautRing& ring, int k, const SurfaceClass& gamma, int n) {
  return slot_L(ring, k, n).contract_external(ring, gamma);
}

OpExpr op_J(const taut::TautRing& ring, int k, int d, const SurfaceClass& gamma, int n) {
  return slot_J(ring, k, d, n).contract_external(ring, gamma);
}

OpExpr op_G(const taut::TautRing& ring, int d, const SurfaceClass& gamma, int n) {
  return slot_G(ring, d, n).contract_external(ring, gamma);
}

OpExpr op_mult_universal(const taut::TautRing& ring, const std::vector<int>& ds, const SurfaceClass& gamma, int n) {
  if (gamma.arity() != static_cast<int>(ds.size())) throw std::invalid_argument("class arity differs from the number of G factors");
  if (ds.empty()) return integrate_all(gamma) * OpExpr::identity();
  OpExpr e = slot_G(ring, ds.back(), n);
  for (int i = static_cast<int>(ds.size()) - 2; i >= 0; --i) e = compose(OpExpr(slot_G(ring, ds[i], n)), e);
  return e.contract(ring, gamma);
}

fock::FockVector fundamental_class(int m) {
  fock::FockVector v(m, 0);
  v.add(Partition(std::vector<int>(m, 1)), taut::Monomial(m), Rational(1) / factorial(m));
  return v;
}

fock::FockVector universal_class(const taut::TautRing& ring, const std::vector<int>& ds, const SurfaceClass& gamma,
                                 int m) {
  return op_mult_universal(ring, ds, gamma, m).apply(ring, fundamental_class(m));
}

OpExpr op_mult_chern(const taut::TautRing& ring, int k, int n) {
  // ch(Tan) = π_*[(ch + ch' - ch·ch') ρ*(1 + 2c)], ch = ch(O_Z), (x)' = (-1)^deg x.
  // The linear part contributes only in even degree.
  OpExpr out(Operator(0, 0));
  const SurfaceClass one = SurfaceClass::one(1);
  const SurfaceClass c = ring.point(1, 0);
  if (k % 2 == 0) {
    const Rational point_coef = fault_active(Fault::kChernPointCoefficient) ? 2 : 4;
    out += Rational(2) * op_G(ring, k + 2, one, n);
    if (k >= 2) out += point_coef * op_G(ring, k, c, n);
  }
  const SurfaceClass diag = ring.diagonal(2, 0, 1);
  const SurfaceClass cc = ring.mul(ring.point(2, 0), ring.point(2, 1));
  for (int i = 2; i <= k; ++i) {
    const int j = k + 2 - i;
    const Rational sign = j % 2 == 0 ? -1 : 1;
    out += sign * op_mult_universal(ring, {i, j}, diag, n);
  }
  for (int i = 2; i + 2 <= k; ++i) {
    const int j = k - i;
    const Rational sign = j % 2 == 0 ? -2 : 2;
    out += sign * op_mult_universal(ring, {i, j}, cc, n);
  }
  return out;
}

OpExpr op_diagonal_decomposition(const taut::TautRing& ring, int n) {
  Operator out(0, 0);
  const SurfaceClass diag = ring.diagonal(2, 0, 1);
  for (const auto& lambda : fock::partitions_of(n)) {
    Word w;
    std::vector<std::pair<std::array<int, 2>, SurfaceClass>> pairs;
    append_pairs(lambda, diag, w, pairs);
    const Rational coef = Rational(lambda.length() % 2 == 0 ? 1 : -1) / z_factor(lambda);
    const auto [nw, nc] = fock::normal_ordered(w, pair_product(ring, static_cast<int>(w.size()), pairs));
    out.add_term(nw, nc * coef);
  }
  return out;
}

OpExpr op_projector(const taut::TautRing& ring, int i, int n) {
  Operator out(0, 0);
  const bool untransposed = fault_active(Fault::kUntransposedProjector);
  // π_{-1} = c_1, π_0 = Δ - c_1 - c_2, π_1 = c_2; index 1 is the creation letter.
  const SurfaceClass c_cre = ring.point(2, 0);
  const SurfaceClass c_ann = ring.point(2, 1);
  const SurfaceClass t_minus = untransposed ? c_cre : c_ann;
  const SurfaceClass t_zero = ring.diagonal(2, 0, 1) - c_cre - c_ann;
  const SurfaceClass t_plus = untransposed ? c_ann : c_cre;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      for (const auto& lam : fock::partitions_of(a)) {
        for (const auto& nu : fock::partitions_of(c)) {
          if (nu.length() - lam.length() != i) continue;
          for (const auto& mu : fock::partitions_of(b)) {
            Word w;
            std::vector<std::pair<std::array<int, 2>, SurfaceClass>> pairs;
            append_pairs(lam, t_minus, w, pairs);
            append_pairs(mu, t_zero, w, pairs);
            append_pairs(nu, t_plus, w, pairs);
            const int len = lam.length() + mu.length() + nu.length();
            const Rational coef = Rational(len % 2 == 0 ? 1 : -1) / (z_factor(lam) * z_factor(mu) * z_factor(nu));
            const auto [nw, nc] = fock::normal_ordered(w, pair_product(ring, static_cast<int>(w.size()), pairs));
            out.add_term(nw, nc * coef);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace k3fock::ops
