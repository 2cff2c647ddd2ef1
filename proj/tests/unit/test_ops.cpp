#include <random>

#include "doctest.h"
#include "k3fock/ops/calculus.hpp"
#include "k3fock/ops/gns.hpp"
#include "k3fock/ops/operators.hpp"
#include "k3fock/ops/weights.hpp"

using namespace k3fock;
using namespace k3fock::fock;
using namespace k3fock::ops;
using taut::SurfaceClass;

namespace {

const FockSpace& space() {
  static const FockSpace s;
  return s;
}

// Hyperbolic plane: (α,α) = (β,β) = 0, (α,β) = 1.
const FockSpace& plane() {
  static const FockSpace s(taut::DivisorLattice::parse("0 1; 1 0"));
  return s;
}

SurfaceClass parse(const FockSpace& sp, const std::string& text, int arity) { return sp.ring().parse(text, arity); }

FockVector q(const FockSpace& sp, const std::vector<int>& parts, const std::string& cls, const Rational& coef = 1) {
  const Partition p(parts);
  FockVector v(p.size());
  v.add(p, parse(sp, cls, p.length()), coef);
  return v;
}

Matrix mat(const FockSpace& sp, const OpExpr& op, int n) { return matrix_of(sp, op, n); }

Rational inv_factorial(int m) {
  long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return rational(1, f);
}

// l^{(n)} = q_1(l) q_1(1)^{n-1} v / (n-1)!.
FockVector divisor_class(const FockSpace& sp, const std::string& label, int n) {
  return q(sp, std::vector<int>(n, 1), label + "_1", inv_factorial(n - 1));
}

}  // namespace

TEST_CASE("signed partitions") {
  // |λ| = 0, length 2, annihilation at most 2: (1,-1), (2,-2).
  const auto two = signed_partitions(0, 2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].letters == Word{1, -1});
  CHECK(two[1].letters == Word{2, -2});
  CHECK(two[1].s == 8);
  // (1,1,-2) has λ! = 2.
  const auto three = signed_partitions(0, 3, 2);
  bool seen = false;
  for (const auto& p : three) {
    if (p.letters == Word{1, 1, -2}) {
      seen = true;
      CHECK(p.inv_factorial == rational(1, 2));
    }
    for (std::size_t i = 1; i < p.letters.size(); ++i) CHECK(p.letters[i - 1] >= p.letters[i]);
  }
  CHECK(seen);
}

TEST_CASE("grading operator on small levels") {
  const auto& ring = space().ring();
  for (int n = 0; n <= 4; ++n) {
    const auto h = op_h(ring, n);
    CHECK(h.apply(ring, fundamental_class(n)) == Rational(-n) * fundamental_class(n));
    // bar(c) = c since c·c_• = 0 and ∫c = 1, so q_n(c)v has eigenvalue 1.
    if (n >= 1) CHECK(h.apply(ring, q(space(), {n}, "c_1")) == q(space(), {n}, "c_1"));
  }
  const auto d = dense(space(), mat(space(), op_h(ring, 1), 1));
  // Basis order 1, α, c.
  CHECK(d[0][0] == -1);
  CHECK(d[1][1] == 0);
  CHECK(d[2][2] == 1);
}

TEST_CASE("shifted grading operator is the codimension") {
  const auto& ring = space().ring();
  for (int n = 1; n <= 4; ++n) {
    const auto ht = op_h_tilde(ring, n);
    CHECK(ht.apply(ring, fundamental_class(n)).is_zero());
    CHECK(ht.apply(ring, divisor_class(space(), "a1", n)) == divisor_class(space(), "a1", n));
    CHECK(ht.apply(ring, q(space(), {n}, "c_1")) == Rational(n + 1) * q(space(), {n}, "c_1"));
  }
}

TEST_CASE("h_ab on divisors") {
  const auto& ring = plane().ring();
  const auto a = parse(plane(), "a1_1", 1);
  const auto b = parse(plane(), "a2_1", 1);
  for (int n = 0; n <= 2; ++n) CHECK(mat(plane(), op_h_alpha_beta(ring, a, a, n), n).is_zero());
  const auto hab = op_h_alpha_beta(ring, a, b, 1);
  // h_αβ(γ) = α(β,γ) - β(α,γ) with (α,β) = 1 and isotropic α, β.
  CHECK(hab.apply(ring, q(plane(), {1}, "1")).is_zero());
  CHECK(hab.apply(ring, q(plane(), {1}, "c_1")).is_zero());
  CHECK(hab.apply(ring, q(plane(), {1}, "a1_1")) == q(plane(), {1}, "a1_1"));
  CHECK(hab.apply(ring, q(plane(), {1}, "a2_1")) == Rational(-1) * q(plane(), {1}, "a2_1"));
  for (int n = 0; n <= 3; ++n) CHECK(op_h_alpha_beta(ring, a, b, n).apply(ring, fundamental_class(n)).is_zero());
}

TEST_CASE("two forms of h_adelta") {
  const auto& ring = space().ring();
  const auto a = parse(space(), "a1_1", 1);
  for (int n = 0; n <= 3; ++n) {
    CHECK(mat(space(), op_h_alpha_delta(ring, a, n), n) == mat(space(), op_h_alpha_delta_virasoro(ring, a, n), n));
    CHECK(op_h_alpha_delta(ring, a, n).apply(ring, fundamental_class(n)).is_zero());
  }
  const auto ch2 = mat(space(), op_mult_chern(ring, 2, 2), 2);
  const auto had = mat(space(), op_h_alpha_delta(ring, a, 2), 2);
  CHECK(commutator(ch2, had).is_zero());
}

TEST_CASE("sl2 triples of the LLV algebra") {
  const auto& ring = space().ring();
  const auto a = parse(space(), "a1_1", 1);
  for (int n = 1; n <= 2; ++n) {
    const auto e = mat(space(), op_e_alpha(ring, a, n), n);
    const auto f = mat(space(), op_f_alpha(ring, a, n), n);
    const auto h = mat(space(), op_h(ring, n), n);
    // (α,α) = 2 on the default lattice.
    CHECK(commutator(e, f) == Rational(2) * h);
    // h counts codimension, so (e, 2h) satisfies [2h, e] = 2e.
    CHECK(commutator(h, e) == e);
    CHECK(op_e_alpha(ring, a, n).apply(ring, fundamental_class(n)) == universal_class(ring, {2}, a, n));
    CHECK(op_e_alpha(ring, a, n).apply(ring, fundamental_class(n)) == divisor_class(space(), "a1", n));
  }
  const auto one = SurfaceClass::one(1);
  CHECK(mat(space(), op_e_delta(ring, 2), 2) == mat(space(), op_G(ring, 3, one, 2), 2));
}

TEST_CASE("boundary class") {
  const auto& ring = space().ring();
  const auto one = SurfaceClass::one(1);
  CHECK(universal_class(ring, {3}, one, 1) == FockVector(1));
  // -1/6 Σ :q_i q_j q_k(Δ_123): on 1_2 keeps the three orderings of (2,-1,-1).
  CHECK(universal_class(ring, {3}, one, 2) == q(space(), {2}, "1", rational(-1, 2)));
  CHECK(op_e_delta(ring, 2).apply(ring, fundamental_class(2)) == q(space(), {2}, "1", rational(-1, 2)));
  // univ_3(c) has codimension 3 > 2 on Hilb_1.
  CHECK(universal_class(ring, {3}, parse(space(), "c_1", 1), 1) == FockVector(1));
}

TEST_CASE("GNS bracket examples") {
  const MukaiForm form(taut::DivisorLattice::parse("2"), 2);
  const auto& b = form.basis();
  const int e = MukaiBasis::e(), f = MukaiBasis::f(), al = b.divisor(0), de = b.delta();
  CHECK(form(de, de) == -2);
  CHECK(form(e, f) == 1);
  const auto ef = GnsElement::wedge(e, f);
  const auto ea = GnsElement::wedge(e, al);
  CHECK(gns_bracket(form, ef, ea) == ea);
  CHECK(gns_bracket(form, ea, GnsElement::wedge(al, f)) == Rational(2) * ef);
  CHECK(gns_bracket(form, ea, ea).is_zero());
  CHECK(GnsElement::wedge(al, al).is_zero());
  CHECK(GnsElement::wedge(f, e) == Rational(-1) * ef);
}

TEST_CASE("GNS bracket is a Lie bracket") {
  const MukaiForm form(taut::DivisorLattice::parse("0 1; 1 0"), 3);
  const int dim = form.basis().size();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&] {
    GnsElement x;
    for (int a = 0; a < dim; ++a) {
      for (int b = a + 1; b < dim; ++b) x += Rational(coef(rng)) * GnsElement::wedge(a, b);
    }
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(), y = random_element(), z = random_element();
    CHECK(gns_bracket(form, x, y) == Rational(-1) * gns_bracket(form, y, x));
    const auto jacobi = gns_bracket(form, x, gns_bracket(form, y, z)) +
                        gns_bracket(form, y, gns_bracket(form, z, x)) +
                        gns_bracket(form, z, gns_bracket(form, x, y));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("action of wedges") {
  const auto& ring = plane().ring();
  const MukaiBasis b{2};
  const int n = 2;
  CHECK(mat(plane(), op_act(ring, GnsElement::wedge(MukaiBasis::e(), MukaiBasis::f()), n), n) ==
        mat(plane(), op_h(ring, n), n));
  CHECK(mat(plane(), op_act(ring, GnsElement::wedge(b.divisor(0), b.divisor(1)), n), n) ==
        mat(plane(), op_h_alpha_beta(ring, parse(plane(), "a1_1", 1), parse(plane(), "a2_1", 1), n), n));
  CHECK(mat(plane(), op_act(ring, GnsElement(), n), n).is_zero());
}

TEST_CASE("Virasoro and J operators") {
  const auto& ring = space().ring();
  const auto one = SurfaceClass::one(1);
  for (int n = 0; n <= 3; ++n) {
    // Z -> Hilb_n is finite of degree n, so G_2(1) = n and L_0(1) = -n.
    CHECK(mat(space(), op_L(ring, 0, one, n), n) == Rational(-n) * identity_matrix(space(), n));
    CHECK(mat(space(), op_G(ring, 2, one, n), n) == Rational(n) * identity_matrix(space(), n));
    CHECK(mat(space(), op_G(ring, 1, one, n), n).is_zero());
  }
  for (int k = -2; k <= 2; ++k) {
    for (int n = std::max(0, -k); n <= 3; ++n) {
      CHECK(mat(space(), op_J(ring, k, 1, one, n), n) == Rational(-1) * mat(space(), op_L(ring, k, one, n), n));
      if (k != 0) {
        CHECK(mat(space(), op_J(ring, k, 0, one, n), n) ==
              Rational(-1) * matrix_of(space(), Operator::term({k}, one), n));
      }
    }
  }
  // [L_k(γ), q_l(1)] = -l q_{k+l}(γ) with k = l = 1, γ = c.
  const auto c = parse(space(), "c_1", 1);
  const auto l1 = mat(space(), op_L(ring, 1, c, 1), 1);
  const auto q1 = matrix_of(space(), Operator::term({1}, one), 0);
  const auto lhs = compose(l1, q1) - compose(matrix_of(space(), Operator::term({1}, one), 1),
                                             mat(space(), op_L(ring, 1, c, 0), 0));
  CHECK(lhs == Rational(-1) * matrix_of(space(), Operator::term({2}, c), 0));
}

TEST_CASE("multiplication by universal classes") {
  const auto& ring = space().ring();
  const auto a = parse(space(), "a1_1", 1);
  const auto c = parse(space(), "c_1", 1);
  const auto one = SurfaceClass::one(1);
  for (int n = 1; n <= 2; ++n) {
    const auto ma = mat(space(), op_mult_universal(ring, {2}, a, n), n);
    const auto md = mat(space(), op_mult_universal(ring, {3}, one, n), n);
    const auto mc = mat(space(), op_mult_universal(ring, {2}, c, n), n);
    CHECK(commutator(ma, md).is_zero());
    CHECK(commutator(ma, mc).is_zero());
    CHECK(commutator(md, mc).is_zero());
    CHECK(apply(ma, universal_class(ring, {3}, one, n)) == apply(md, universal_class(ring, {2}, a, n)));
    CHECK(apply(ma, fundamental_class(n)) == divisor_class(space(), "a1", n));
    CHECK(apply(compose(ma, md), fundamental_class(n)) == universal_class(ring, {2, 3}, parse(space(), "a1_1", 2), n));
  }
}

TEST_CASE("Chern character multiplication") {
  const auto& ring = space().ring();
  for (int n = 1; n <= 2; ++n) {
    // ch_0 of a rank 2n bundle.
    CHECK(mat(space(), op_mult_chern(ring, 0, n), n) == Rational(2 * n) * identity_matrix(space(), n));
    CHECK(mat(space(), op_mult_chern(ring, 1, n), n).is_zero());
    const auto ch2 = mat(space(), op_mult_chern(ring, 2, n), n);
    const auto ht = mat(space(), op_h_tilde(ring, n), n);
    CHECK(commutator(ht, ch2) == Rational(2) * ch2);
  }
  // Tan S has ch_2 = -c_2 = -24 pt.
  CHECK(op_mult_chern(ring, 2, 1).apply(ring, fundamental_class(1)) == q(space(), {1}, "c_1", -24));
}

TEST_CASE("projectors") {
  const auto& ring = space().ring();
  const int n = 2;
  Matrix sum = zero_matrix(space(), n, n);
  std::vector<Matrix> p;
  for (int i = -n; i <= n; ++i) {
    p.push_back(mat(space(), op_projector(ring, i, n), n));
    sum += p.back();
  }
  CHECK(sum == identity_matrix(space(), n));
  const auto h = mat(space(), op_h(ring, n), n);
  for (int i = 0; i < 2 * n + 1; ++i) {
    for (int j = 0; j < 2 * n + 1; ++j) {
      CHECK(compose(p[i], p[j]) == (i == j ? p[i] : zero_matrix(space(), n, n)));
    }
    CHECK(compose(h, p[i]) == Rational(i - n) * p[i]);
  }
  CHECK(mat(space(), op_projector(ring, 3, n), n).is_zero());
}

TEST_CASE("weight decomposition") {
  const auto& ring = space().ring();
  const int n = 2;
  const int dim = space().basis(n)->size();
  const auto whole = weight_decomposition(space(), n, {});
  REQUIRE(whole.size() == 1);
  CHECK(static_cast<int>(whole[0].basis.size()) == dim);

  const auto blocks = weight_decomposition(space(), n, {op_h(ring, n)});
  for (const auto& b : blocks) {
    const int i = static_cast<int>(b.eigenvalues[0].get_num().get_si()) + n;
    CHECK(static_cast<int>(b.basis.size()) == dense_rank(dense(space(), mat(space(), op_projector(ring, i - n, n), n))));
  }

  const auto refined = refined_decomposition(space(), n);
  REQUIRE(!refined.empty());
  CHECK(refined.front().weight.i == 0);
  CHECK(refined.front().weight.s == 0);
  CHECK(refined.front().basis.size() == 1);

  const auto a = parse(space(), "a1_1", 1);
  CHECK_THROWS_AS(weight_decomposition(space(), n, {op_h(ring, n), op_e_alpha(ring, a, n)}), WeightDecompositionError);
  CHECK_THROWS_AS(weight_decomposition(space(), n, {op_e_alpha(ring, a, n)}), WeightDecompositionError);
  CHECK_THROWS_AS(weight_decomposition(space(), n, {op_q({1}, SurfaceClass::one(1))}), WeightDecompositionError);
}

TEST_CASE("bar calculus on small classes") {
  const auto& ring = space().ring();
  const auto c = parse(space(), "c_1", 1);
  CHECK(bar(ring, c, {0}) == c);
  CHECK(bar(ring, SurfaceClass::one(1), {0}) == Rational(-1) * SurfaceClass::one(1));
  CHECK(integrate_first(c) == SurfaceClass::one(0));
}

TEST_CASE("serial and parallel evaluation agree on operators") {
  const auto& ring = space().ring();
  const auto a = parse(space(), "a1_1", 1);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& op : {op_h_alpha_delta(ring, a, n), op_f_delta(ring, n), op_mult_chern(ring, 2, n)}) {
      CHECK(matrix_of(space(), op, n) == matrix_of_serial(space(), op, n));
    }
  }
}
