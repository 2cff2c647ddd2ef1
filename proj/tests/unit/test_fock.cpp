#include <algorithm>

#include "doctest.h"
#include "k3fock/faults.hpp"
#include "k3fock/fock/matrix.hpp"

using namespace k3fock;
using namespace k3fock::fock;
using taut::SurfaceClass;

namespace {

const FockSpace& space() {
  static const FockSpace s;
  return s;
}

SurfaceClass parse(const std::string& text, int arity) { return space().ring().parse(text, arity); }

FockVector q(const std::vector<int>& parts, const std::string& cls) {
  const Partition p(parts);
  FockVector v(p.size());
  v.add(p, parse(cls, p.length()));
  return v;
}

// Matrix of the single-letter operator q_k(x) on level n.
Matrix letter(int k, const SurfaceClass& x, int n) { return matrix_of(space(), Operator::term({k}, x), n); }

}  // namespace

TEST_CASE("partition statistics") {
  const Partition p({1, 3, 1, 1, 2});
  CHECK(p.parts() == std::vector<int>{3, 2, 1, 1, 1});
  CHECK(p.size() == 8);
  CHECK(p.length() == 5);
  CHECK(p.s() == 16);
  CHECK(p.aut_order() == 6);
  CHECK(p.z() == 36);
  CHECK_THROWS(Partition({2, 0}));
  // Partition counts 1, 1, 2, 3, 5, 7, 11, 15, 22.
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions_of(4, 2).size() == 2);
}

TEST_CASE("basis sizes") {
  CHECK(space().basis(0)->size() == 1);
  CHECK(space().basis(1)->size() == 3);
  CHECK(space().basis(2)->size() == 10);
  // Orbit counts by hand: λ=(3): 3, (2,1): 10, (1,1,1): symmetric monomials on S³.
  // Unordered label triples 10, Δ_ij c-free: pair + one label on the third: 3 = 13.
  CHECK(space().basis(3)->size() == 3 + 10 + 13);
  const FockSpace rank2(taut::DivisorLattice::parse("0 1; 1 0"));
  CHECK(rank2.basis(1)->size() == 4);
  CHECK(rank2.basis(2)->size() == 4 + (10 + 1));
}

TEST_CASE("vacuum and elementary operators") {
  const auto v = FockVector::vacuum();
  CHECK(v.n() == 0);
  CHECK(v.terms().size() == 1);
  CHECK(apply_annihilate(1, v).is_zero());
  CHECK(apply_annihilate(3, v).is_zero());
  CHECK_THROWS(apply_create(0, v));

  // [q_{-1}(c), q_1(1)] = -1 on the vacuum.
  const auto one = contract_slots(space().ring(), apply_create(1, v), SurfaceClass::one(1));
  CHECK(one == q({1}, "1"));
  const auto back = contract_slots(space().ring(), apply_annihilate(1, one), parse("c_1", 1));
  CHECK(back == Rational(-1) * FockVector::vacuum());
  // q_{-1}(β) q_1(α) v = -(α,β) v
  const auto qa = q({1}, "a1_1");
  CHECK(contract_slots(space().ring(), apply_annihilate(1, qa), parse("a1_1", 1)) ==
        Rational(-2) * FockVector::vacuum());
  CHECK(apply_annihilate(1, q({2}, "c_1")).is_zero());
}

TEST_CASE("creation order does not matter") {
  const auto& ring = space().ring();
  const auto v = FockVector::vacuum();
  const auto a = contract_slots(ring, apply_create(2, apply_create(1, v)), parse("a1_1*c_2", 2));
  const auto b = contract_slots(ring, apply_create(1, apply_create(2, v)), parse("a1_2*c_1", 2));
  CHECK(a == b);
  CHECK(a == q({2, 1}, "c_1*a1_2"));
}

TEST_CASE("hand contractions of q_2 q_-2") {
  const auto op = Operator::term({2, -2}, parse("c_2 - c_1", 2));
  CHECK(op.apply(space().ring(), q({2}, "1")) == Rational(-2) * q({2}, "1"));
  CHECK(op.apply(space().ring(), q({2}, "c_1")) == Rational(2) * q({2}, "c_1"));
}

TEST_CASE("q_0 vanishes and identity is the identity") {
  CHECK(Operator::term({0}, SurfaceClass::one(1)).is_zero());
  CHECK(matrix_of(space(), Operator::identity(), 2) == identity_matrix(space(), 2));
  CHECK(matrix_of(space(), Operator::term({0, 1}, SurfaceClass::one(2)), 1).is_zero());
}

TEST_CASE("Heisenberg relations for small indices") {
  const auto& ring = space().ring();
  const auto labels = ring.canonical_basis(1);
  for (int n = 0; n <= 3; ++n) {
    for (int k = -2; k <= 2; ++k) {
      for (int l = -2; l <= 2; ++l) {
        if (k == 0 || l == 0 || n + k < 0 || n + l < 0 || n + k + l < 0) continue;
        for (const auto& xm : labels) {
          for (const auto& ym : labels) {
            const auto x = SurfaceClass::from_monomial(xm);
            const auto y = SurfaceClass::from_monomial(ym);
            const Matrix lhs = compose(letter(k, x, n + l), letter(l, y, n)) -
                               compose(letter(l, y, n + k), letter(k, x, n));
            Matrix rhs = zero_matrix(space(), n, n + k + l);
            if (k + l == 0) rhs = Rational(Rational(k) * ring.pairing(x, y)) * identity_matrix(space(), n);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("grading operator at n = 1") {
  Operator h;
  h += Operator::term({1, -1}, parse("c_2 - c_1", 2));
  const auto d = dense(space(), matrix_of(space(), h, 1));
  // Basis order 1, α, c.
  CHECK(d[0][0] == -1);
  CHECK(d[1][1] == 0);
  CHECK(d[2][2] == 1);
  CHECK(d[0][1] == 0);
  CHECK(d[1][0] == 0);
}

TEST_CASE("word transposition") {
  const auto t = Operator::term({2}, SurfaceClass::one(1)).transposed();
  CHECK(t.terms().begin()->first == Word{-2});
  CHECK(t.terms().begin()->second == SurfaceClass::one(1));
  const auto d = parse("D(1,2)", 2);
  const auto t2 = Operator::term({1, 1}, d).transposed();
  CHECK(t2.terms().begin()->first == Word{-1, -1});
  CHECK(t2.terms().begin()->second == d);
  const auto g = Operator::term({3, -1}, parse("a1_1*c_2", 2));
  const auto tt = g.transposed().transposed();
  CHECK(tt.terms() == g.terms());
  // ᵗ(q_3 q_{-1}(α_1 c_2)) = q_1 q_{-3}(c_1 α_2), with sign (-1)^{3-1}.
  CHECK(g.transposed().terms().begin()->first == Word{1, -3});
  CHECK(g.transposed().terms().begin()->second == parse("c_1*a1_2", 2));
}

TEST_CASE("normal ordering permutes the attached class") {
  const auto [w, cls] = normal_ordered({-1, 2, 1}, parse("a1_1*c_3", 3));
  CHECK(w == Word{2, 1, -1});
  CHECK(cls == parse("c_2*a1_3", 3));
}

TEST_CASE("parallel and serial evaluation agree") {
  Operator op;
  for (int k = 1; k <= 3; ++k) {
    op += Rational(1, k) * Operator::term({k, -k}, parse("c_2 - c_1 + D(1,2)", 2));
  }
  for (int n = 0; n <= 3; ++n) CHECK(matrix_of(space(), op, n) == matrix_of_serial(space(), op, n));
}

TEST_CASE("mixing weights is rejected") {
  Operator op = Operator::term({1}, SurfaceClass::one(1));
  CHECK_THROWS_WITH(op += Operator::term({2}, SurfaceClass::one(1)), "op mixes target weights");
}

TEST_CASE("codimension of basis vectors") {
  const auto table = space().basis(3);
  CHECK(FockSpace::codim_of(BasisKey{Partition({1, 1, 1}), taut::Monomial(3)}) == 0);
  CHECK(FockSpace::codim_of(q({3}, "c_1").terms().begin()->first) == 4);
  CHECK(FockSpace::codim_of(q({1}, "a1_1").terms().begin()->first) == 1);
  const auto text = basis_index_text(*table);
  CHECK(std::count(text.begin(), text.end(), '\n') == table->size());
}

TEST_CASE("annihilation sign fault is observable") {
  FaultGuard g(Fault::kAnnihilationSign);
  const auto back = contract_slots(space().ring(), apply_annihilate(1, q({1}, "1")), parse("c_1", 1));
  CHECK(back == FockVector::vacuum());
}
