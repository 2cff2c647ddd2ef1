#include <algorithm>
#include <random>
#include <set>

#include "betti_model.hpp"
#include "doctest.h"
#include "k3fock/faults.hpp"
#include "k3fock/taut/ring.hpp"

using namespace k3fock;
using namespace k3fock::taut;

namespace {

TautRing rank2_ring() { return TautRing(DivisorLattice::parse("0 1; 1 0")); }

// Rank of a list of sparse vectors by Gaussian elimination over Q.
std::size_t sparse_rank(std::vector<betti::Tensor> rows) {
  std::vector<betti::Tensor> pivots;
  for (auto row : rows) {
    for (const auto& p : pivots) {
      const auto& lead = p.begin()->first;
      auto it = row.find(lead);
      if (it == row.end()) continue;
      const Rational f = it->second / p.begin()->second;
      for (const auto& [idx, c] : p) row[idx] -= f * c;
      row = betti::Model::prune(row);
    }
    if (row.empty()) continue;
    // Keep pivots reduced against the new one so leads stay unique.
    const auto lead = row.begin()->first;
    for (auto& p : pivots) {
      auto it = p.find(lead);
      if (it == p.end()) continue;
      const Rational f = it->second / row.begin()->second;
      for (const auto& [idx, c] : row) p[idx] -= f * c;
      p = betti::Model::prune(p);
    }
    pivots.push_back(std::move(row));
  }
  return pivots.size();
}

Monomial random_monomial(std::mt19937& rng, int k, int rho) {
  Monomial m(k);
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int t = 0; t < k; ++t) {
    const int i = order[t];
    if (m.matched(i)) continue;
    const int choice = std::uniform_int_distribution<int>(0, 3 + rho)(rng);
    if (choice == 0 && t + 1 < k) {
      const int j = order[std::uniform_int_distribution<int>(t + 1, k - 1)(rng)];
      if (!m.matched(j)) {
        m.set_label(j, Label::one());
        m.match(i, j);
        continue;
      }
    }
    if (choice == 1) m.set_label(i, Label::point());
    if (choice >= 2 && choice < 2 + rho) m.set_label(i, Label::divisor(choice - 2));
  }
  return m;
}

}  // namespace

TEST_CASE("rewrite rules on small examples") {
  const TautRing r;
  CHECK(r.mul(r.diagonal(2, 0, 1), r.point(2, 0)) == r.parse("c_1*c_2", 2));
  CHECK(to_string(r.mul(r.diagonal(2, 0, 1), r.divisor(2, 0, 0))) == "a1_1*c_2 + c_1*a1_2");
  CHECK(r.mul(r.point(1, 0), r.point(1, 0)).is_zero());
  CHECK(r.mul(r.divisor(1, 0, 0), r.divisor(1, 0, 0)) == r.point(1, 0) * 2);
  CHECK(r.mul(r.diagonal(2, 0, 1), r.diagonal(2, 0, 1)) == r.parse("24*c_1*c_2", 2));
  CHECK(r.mul(r.divisor(1, 0, 0), r.point(1, 0)).is_zero());
}

TEST_CASE("small diagonal identity") {
  const TautRing r;
  const auto lhs = r.mul(r.diagonal(3, 0, 1), r.diagonal(3, 1, 2));
  const auto rhs = r.parse("D(1,2)*c_3 + D(1,3)*c_2 + D(2,3)*c_1 - c_1*c_2 - c_1*c_3 - c_2*c_3", 3);
  CHECK(lhs == rhs);
  CHECK(r.small_diagonal(3, {0, 1, 2}) == rhs);
}

TEST_CASE("pullback, pushforward, integration, pairing") {
  const TautRing r;
  CHECK(pullback(r.point(1, 0), {1}, 2) == r.point(2, 1));
  CHECK(pullback(r.diagonal(2, 0, 1), {0, 2}, 3) == r.diagonal(3, 0, 2));
  CHECK(pullback(r.parse("a1_1*c_2", 2), {1, 0}, 2) == r.parse("a1_2*c_1", 2));
  CHECK_THROWS(pullback(r.point(2, 0), {1, 1}, 3));
  CHECK(pushforward(r.point(1, 0), {0}) == SurfaceClass::one(0));
  CHECK(pushforward(r.divisor(1, 0, 0), {0}).is_zero());
  // ∫_• Δ_{1•} γ_• = γ_1
  for (const auto& g : r.canonical_basis(1)) {
    const auto gamma = pullback(SurfaceClass::from_monomial(g), {1}, 2);
    CHECK(pushforward(r.mul(r.diagonal(2, 0, 1), gamma), {1}) == SurfaceClass::from_monomial(g));
  }
  CHECK(integrate_all(r.parse("5*c_1*c_2", 2)) == 5);
  CHECK(integrate_all(r.parse("a1_1*c_2", 2)) == 0);
  CHECK(integrate_all(r.diagonal(2, 0, 1)) == 0);
  CHECK(r.pairing(SurfaceClass::one(1), r.point(1, 0)) == 1);
  CHECK(r.pairing(r.divisor(1, 0, 0), r.divisor(1, 0, 0)) == 2);
  CHECK(r.pairing(r.point(1, 0), r.point(1, 0)) == 0);
}

TEST_CASE("transpose and symmetrize") {
  const TautRing r;
  CHECK(transpose(r.point(2, 0), 1, 1) == r.point(2, 1));
  CHECK(transpose(r.diagonal(2, 0, 1), 1, 1) == r.diagonal(2, 0, 1));
  CHECK(transpose(r.parse("a1_1*c_2", 2), 1, 1) == r.parse("a1_2*c_1", 2));
  CHECK_THROWS(transpose(r.point(2, 0), 1, 2));
  CHECK(symmetrize(r.divisor(2, 0, 0), {{0, 1}}) == r.parse("1/2*a1_1 + 1/2*a1_2", 2));
  CHECK(symmetrize(r.diagonal(2, 0, 1), {{0, 1}}) == r.diagonal(2, 0, 1));
  const auto x = r.parse("a1_1*c_2 + 3*D(1,3) - c_2", 3);
  const auto s = symmetrize(x, {{0, 1, 2}});
  CHECK(symmetrize(s, {{0, 1, 2}}) == s);
}

TEST_CASE("canonical basis sizes against brute-force enumeration") {
  const TautRing r;
  CHECK(r.canonical_basis(0).size() == 1);
  CHECK(r.canonical_basis(1).size() == 3);
  CHECK(r.canonical_basis(2).size() == 10);
  // Count partial matchings with p pairs times (ρ+2)^(k-2p) labelings.
  for (int rho : {1, 2}) {
    const TautRing rr(rho == 1 ? DivisorLattice() : DivisorLattice::parse("0 1; 1 0"));
    for (int k = 0; k <= 5; ++k) {
      std::size_t expected = 0;
      for (int p = 0; 2 * p <= k; ++p) {
        std::size_t ways = 1;
        for (int t = 0; t < 2 * p; ++t) ways *= static_cast<std::size_t>(k - t);
        for (int t = 1; t <= p; ++t) ways /= static_cast<std::size_t>(2 * t);
        std::size_t labels = 1;
        for (int t = 0; t < k - 2 * p; ++t) labels *= static_cast<std::size_t>(rho + 2);
        expected += ways * labels;
      }
      const auto basis = rr.canonical_basis(k);
      CHECK(basis.size() == expected);
      CHECK(std::set<Monomial>(basis.begin(), basis.end()).size() == basis.size());
      CHECK(std::is_sorted(basis.begin(), basis.end(), canonical_less));
    }
  }
}

TEST_CASE("multiplication matches the cohomological model") {
  for (const auto& r : {TautRing(), rank2_ring()}) {
    const betti::Model model(r.lattice());
    for (int k = 1; k <= 3; ++k) {
      const auto basis = r.canonical_basis(k);
      std::vector<betti::Tensor> images;
      for (const auto& m : basis) images.push_back(model.image(m));
      // The cycle class map is injective on the canonical basis.
      CHECK(sparse_rank(images) == basis.size());
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
          const auto prod = r.mul_monomials(basis[a], basis[b]);
          const bool same = model.image(prod) == model.mul(images[a], images[b]);
          if (!same) {
            INFO(to_string(basis[a]) << " * " << to_string(basis[b]) << " = " << to_string(prod));
            CHECK(same);
          }
        }
      }
    }
  }
}

TEST_CASE("self-intersection of the diagonal uses the Euler characteristic") {
  const TautRing r;
  const betti::Model model(r.lattice());
  const auto d = model.image(r.diagonal(2, 0, 1));
  CHECK(model.mul(d, d) == model.image(r.parse("24*c_1*c_2", 2)));
}

TEST_CASE("commutativity and associativity on random monomials") {
  std::mt19937 rng(7);
  for (const auto& r : {TautRing(), rank2_ring()}) {
    for (int trial = 0; trial < 300; ++trial) {
      const int k = 1 + trial % 4;
      const Monomial a = random_monomial(rng, k, r.lattice().rank());
      const Monomial b = random_monomial(rng, k, r.lattice().rank());
      const Monomial c = random_monomial(rng, k, r.lattice().rank());
      CHECK(r.mul_monomials(a, b) == r.mul_monomials(b, a));
      const auto ab_c = r.mul(r.mul_monomials(a, b), SurfaceClass::from_monomial(c));
      const auto a_bc = r.mul(SurfaceClass::from_monomial(a), r.mul_monomials(b, c));
      CHECK(ab_c == a_bc);
    }
  }
}

TEST_CASE("text format round trip") {
  const TautRing r = rank2_ring();
  const auto x = r.parse("3/2*D(1,2)*c_3 - a1_2*c_1 + a2_3 - 7", 3);
  CHECK(r.parse(to_string(x), 3) == x);
  CHECK(to_string(SurfaceClass(2)) == "0");
  CHECK(r.parse("0", 2).is_zero());
  CHECK_THROWS(r.parse("c_4", 3));
  CHECK_THROWS(r.parse("a3_1", 3));
  CHECK_THROWS(r.parse("D(1,1)", 3));
  CHECK_THROWS(r.parse("c_1 c_2", 3));
}

TEST_CASE("lattice parsing") {
  CHECK(DivisorLattice::parse("2").rank() == 1);
  const auto h = DivisorLattice::parse("0 1; 1 0");
  CHECK(h.rank() == 2);
  CHECK(h.pairing(0, 1) == 1);
  CHECK_THROWS(DivisorLattice::parse("0 1; 2 0"));
  CHECK_THROWS(DivisorLattice::parse("0 1; 1"));
  CHECK(DivisorLattice::parse("").rank() == 0);
}

TEST_CASE("faults change the rules they target") {
  const TautRing r;
  {
    FaultGuard g(Fault::kFlipDiagonalDivisorSign);
    CHECK(to_string(r.mul(r.diagonal(2, 0, 1), r.divisor(2, 0, 0))) == "a1_1*c_2 - c_1*a1_2");
  }
  {
    FaultGuard g(Fault::kDoubleDiagonalZero);
    CHECK(r.mul(r.diagonal(2, 0, 1), r.diagonal(2, 0, 1)).is_zero());
  }
  CHECK(r.mul(r.diagonal(2, 0, 1), r.diagonal(2, 0, 1)) == r.parse("24*c_1*c_2", 2));
}
