#include "k3fock/ops/gns.hpp"

#include <sstream>

#include "k3fock/faults.hpp"
#include "k3fock/ops/operators.hpp"

namespace k3fock::ops {

std::string MukaiBasis::name(int v) const {
  if (v == e()) return "e";
  if (v == f()) return "f";
  if (v == delta()) return "δ";
  return "a" + std::to_string(v - 1);
}

MukaiForm::MukaiForm(const taut::DivisorLattice& lattice, int n)
    : lattice_(lattice), basis_{lattice.rank()}, n_(n) {}

Rational MukaiForm::operator()(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a == MukaiBasis::e() && b == MukaiBasis::f()) return 1;
  if (basis_.is_divisor(a) && basis_.is_divisor(b)) return lattice_.pairing(a - 2, b - 2);
  if (a == basis_.delta() && b == basis_.delta()) {
    return fault_active(Fault::kDeltaSelfPairingSign) ? 2 * n_ - 2 : 2 - 2 * n_;
  }
  return 0;
}

GnsElement GnsElement::wedge(int a, int b) {
  GnsElement x;
  x.add(a, b, 1);
  return x;
}

void GnsElement::add(int a, int b, const Rational& coef) {
  if (a == b || coef == 0) return;
  Rational c = coef;
  if (a > b) {
    std::swap(a, b);
    c = -c;
  }
  auto [it, fresh] = terms_.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GnsElement& GnsElement::operator+=(const GnsElement& o) {
  for (const auto& [ab, c] : o.terms_) add(ab.first, ab.second, c);
  return *this;
}

GnsElement& GnsElement::operator-=(const GnsElement& o) {
  for (const auto& [ab, c] : o.terms_) add(ab.first, ab.second, -c);
  return *this;
}

GnsElement& GnsElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [ab, c] : terms_) c *= s;
  return *this;
}

std::string GnsElement::to_string(const MukaiBasis& basis) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ab, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << basis.name(ab.first) << "∧" << basis.name(ab.second);
  }
  return os.str();
}

GnsElement gns_bracket(const MukaiForm& form, const GnsElement& x, const GnsElement& y) {
  GnsElement out;
  for (const auto& [ab, s] : x.terms()) {
    const auto [a, b] = ab;
    for (const auto& [cd, t] : y.terms()) {
      const auto [c, d] = cd;
      const Rational st = s * t;
      out += (st * form(a, d)) * GnsElement::wedge(b, c);
      out -= (st * form(a, c)) * GnsElement::wedge(b, d);
      out -= (st * form(b, d)) * GnsElement::wedge(a, c);
      out += (st * form(b, c)) * GnsElement::wedge(a, d);
    }
  }
  return out;
}

namespace {

OpExpr act_basis(const taut::TautRing& ring, const MukaiBasis& mb, int a, int b, int n) {
  auto divisor = [&](int v) { return ring.divisor(1, 0, v - 2); };
  const int e = MukaiBasis::e(), f = MukaiBasis::f(), delta = mb.delta();
  if (a == e && b == f) return op_h(ring, n);
  if (a == e) return b == delta ? op_e_delta(ring, n) : op_e_alpha(ring, divisor(b), n);
  // f∧v = -(v∧f)
  if (a == f) return Rational(-1) * (b == delta ? op_f_delta(ring, n) : op_f_alpha(ring, divisor(b), n));
  if (b == delta) return op_h_alpha_delta(ring, divisor(a), n);
  return op_h_alpha_beta(ring, divisor(a), divisor(b), n);
}

}  // namespace

OpExpr op_act(const taut::TautRing& ring, const GnsElement& x, int n) {
  const MukaiBasis mb{ring.lattice().rank()};
  OpExpr out(fock::Operator(0, 0));
  for (const auto& [ab, c] : x.terms()) out += c * act_basis(ring, mb, ab.first, ab.second, n);
  return out;
}

}  // namespace k3fock::ops
