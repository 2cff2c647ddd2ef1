#include "k3fock/taut/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "k3fock/faults.hpp"

namespace k3fock::taut {
namespace {

using Terms = SurfaceClass::Terms;

void accumulate(Terms& out, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

struct Generator {
  enum class Kind { kLabel, kDiag } kind;
  int i;
  int j;    // kDiag only
  Label l;  // kLabel only
};

std::vector<Generator> generators(const Monomial& m) {
  std::vector<Generator> out;
  for (const auto& [i, j] : m.matching()) out.push_back({Generator::Kind::kDiag, i, j, {}});
  for (const auto& [i, l] : m.labels()) out.push_back({Generator::Kind::kLabel, i, 0, l});
  return out;
}

}  // namespace

DivisorLattice::DivisorLattice() : gram_{{Rational(2)}} {}

DivisorLattice::DivisorLattice(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
  const std::size_t r = gram_.size();
  if (r > 100) throw std::invalid_argument("lattice rank too large");
  for (const auto& row : gram_) {
    if (row.size() != r) throw std::invalid_argument("gram matrix is not square");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
    }
  }
}

DivisorLattice DivisorLattice::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string s(text);
  std::stringstream all(s);
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::stringstream row_stream(row_text);
    std::vector<Rational> row;
    std::string entry;
    while (row_stream >> entry) {
      Rational q;
      if (q.set_str(entry, 10) != 0) throw std::invalid_argument("bad gram entry '" + entry + "'");
      q.canonicalize();
      row.push_back(q);
    }
    if (!row.empty() || !rows.empty()) rows.push_back(std::move(row));
  }
  if (!rows.empty() && rows.back().empty()) rows.pop_back();
  return DivisorLattice(std::move(rows));
}

std::string DivisorLattice::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < gram_[i].size(); ++j) {
      if (j) out += ' ';
      out += gram_[i][j].get_str();
    }
  }
  return out;
}

TautRing::TautRing(DivisorLattice lattice) : lattice_(std::move(lattice)) {}

namespace {

// Multiplies a monomial by a single label generator at index i.
void times_label(const DivisorLattice& lat, const Monomial& m, int i, Label l,
                 const Rational& c, Terms& out) {
  if (l.kind == Label::Kind::kOne) {
    accumulate(out, m, c);
    return;
  }
  if (!m.matched(i)) {
    const Label cur = m.label(i);
    Monomial r = m;
    if (cur.kind == Label::Kind::kOne) {
      r.set_label(i, l);
      accumulate(out, r, c);
    } else if (cur.kind == Label::Kind::kDiv && l.kind == Label::Kind::kDiv) {
      const Rational& g = lat.pairing(cur.div, l.div);
      if (g == 0) return;
      r.set_label(i, Label::point());
      accumulate(out, r, c * g);
    }
    return;
  }
  const int j = m.partner(i);
  Monomial r = m;
  r.unmatch(i);
  if (l.kind == Label::Kind::kPoint) {
    r.set_label(i, Label::point());
    r.set_label(j, Label::point());
    accumulate(out, r, c);
    return;
  }
  Monomial a = r;
  a.set_label(i, l);
  a.set_label(j, Label::point());
  accumulate(out, a, c);
  Monomial b = r;
  b.set_label(j, l);
  b.set_label(i, Label::point());
  accumulate(out, b, fault_active(Fault::kFlipDiagonalDivisorSign) ? Rational(-c) : c);
}

// Δ_ij Δ_ik on bare indices i, j, k of m0, expanded by the small-diagonal
// identity into pair and point terms.
std::vector<std::pair<Monomial, Rational>> small_diagonal3(const Monomial& m0, int i, int j, int k) {
  std::vector<std::pair<Monomial, Rational>> t;
  auto with_pair = [&](int a, int b, int p) {
    Monomial r = m0;
    r.match(a, b);
    r.set_label(p, Label::point());
    t.emplace_back(r, 1);
  };
  auto with_points = [&](int a, int b) {
    Monomial r = m0;
    r.set_label(a, Label::point());
    r.set_label(b, Label::point());
    t.emplace_back(r, -1);
  };
  with_pair(i, j, k);
  with_pair(i, k, j);
  with_pair(j, k, i);
  with_points(i, j);
  with_points(i, k);
  with_points(j, k);
  return t;
}

void times_diag(const DivisorLattice& lat, const Monomial& m, int i, int j, const Rational& c,
                Terms& out) {
  const bool mi = m.matched(i);
  const bool mj = m.matched(j);
  if (mi && m.partner(i) == j) {
    if (fault_active(Fault::kDoubleDiagonalZero)) return;
    Monomial r = m;
    r.unmatch(i);
    r.set_label(i, Label::point());
    r.set_label(j, Label::point());
    accumulate(out, r, 24 * c);
    return;
  }
  if (!mi && !mj) {
    const Label li = m.label(i);
    const Label lj = m.label(j);
    Monomial r = m;
    r.set_label(i, Label::one());
    r.set_label(j, Label::one());
    r.match(i, j);
    Terms step;
    times_label(lat, r, i, li, c, step);
    for (const auto& [t, tc] : step) times_label(lat, t, j, lj, tc, out);
    return;
  }
  if (!mi) std::swap(i, j);
  // Now i is matched (to k != j).
  const int k = m.partner(i);
  Monomial m0 = m;
  m0.unmatch(i);
  if (!m.matched(j)) {
    const Label lj = m.label(j);
    m0.set_label(j, Label::one());
    for (const auto& [t, tc] : small_diagonal3(m0, i, j, k)) {
      times_label(lat, t, j, lj, c * tc, out);
    }
    return;
  }
  const int l = m.partner(j);
  m0.unmatch(j);
  for (const auto& [t, tc] : small_diagonal3(m0, i, j, k)) times_diag(lat, t, j, l, c * tc, out);
}

}  // namespace

void TautRing::mul_accumulate(const Monomial& a, const Monomial& b, const Rational& coef,
                              Terms& out) const {
  if (a.arity() != b.arity()) throw std::invalid_argument("mul: arity mismatch");
  if (coef == 0) return;
  Terms cur;
  cur.emplace(a, coef);
  for (const auto& g : generators(b)) {
    Terms next;
    for (const auto& [m, c] : cur) {
      if (g.kind == Generator::Kind::kDiag) {
        times_diag(lattice_, m, g.i, g.j, c, next);
      } else {
        times_label(lattice_, m, g.i, g.l, c, next);
      }
    }
    cur = std::move(next);
    if (cur.empty()) return;
  }
  for (const auto& [m, c] : cur) accumulate(out, m, c);
}

SurfaceClass TautRing::mul_monomials(const Monomial& a, const Monomial& b) const {
  SurfaceClass out(a.arity());
  Terms t;
  mul_accumulate(a, b, 1, t);
  for (const auto& [m, c] : t) out.add(m, c);
  return out;
}

SurfaceClass TautRing::mul(const SurfaceClass& a, const SurfaceClass& b) const {
  if (a.arity() != b.arity()) throw std::invalid_argument("mul: arity mismatch");
  Terms t;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) mul_accumulate(ma, mb, ca * cb, t);
  }
  SurfaceClass out(a.arity());
  for (const auto& [m, c] : t) out.add(m, c);
  return out;
}

Rational TautRing::pairing(const SurfaceClass& a, const SurfaceClass& b) const {
  if (a.arity() != 1 || b.arity() != 1) throw std::invalid_argument("pairing: classes must live on S");
  return integrate_all(mul(a, b));
}

SurfaceClass TautRing::point(int k, int i) const {
  Monomial m(k);
  m.set_label(i, Label::point());
  return SurfaceClass::from_monomial(m);
}

SurfaceClass TautRing::divisor(int k, int i, int j) const {
  if (j < 0 || j >= lattice_.rank()) throw std::out_of_range("divisor index out of range");
  Monomial m(k);
  m.set_label(i, Label::divisor(j));
  return SurfaceClass::from_monomial(m);
}

SurfaceClass TautRing::diagonal(int k, int i, int j) const {
  if (i == j) throw std::invalid_argument("diagonal needs two distinct indices");
  Monomial m(k);
  m.match(i, j);
  return SurfaceClass::from_monomial(m);
}

SurfaceClass TautRing::small_diagonal(int k, const std::vector<int>& idx) const {
  SurfaceClass out = SurfaceClass::one(k);
  for (std::size_t t = 1; t < idx.size(); ++t) out = mul(out, diagonal(k, idx[0], idx[t]));
  return out;
}

std::vector<Monomial> TautRing::canonical_basis(int k) const {
  std::vector<Label> labels{Label::one()};
  for (int j = 0; j < lattice_.rank(); ++j) labels.push_back(Label::divisor(j));
  labels.push_back(Label::point());
  std::vector<Monomial> out;
  std::function<void(Monomial&, int)> rec = [&](Monomial& m, int i) {
    while (i < k && m.matched(i)) ++i;
    if (i == k) {
      out.push_back(m);
      return;
    }
    for (const Label& l : labels) {
      m.set_label(i, l);
      rec(m, i + 1);
    }
    m.set_label(i, Label::one());
    for (int j = i + 1; j < k; ++j) {
      if (m.matched(j)) continue;
      const Label lj = m.label(j);
      m.match(i, j);
      rec(m, i + 1);
      m.unmatch(i);
      m.set_label(j, lj);
    }
  };
  Monomial m(k);
  rec(m, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Grammar (whitespace ignored):
//   class   := term (('+' | '-') term)* | '0'
//   term    := ['-'] [coef '*'] factor ('*' factor)* | ['-'] coef
//   coef    := integer ['/' integer]
//   factor  := '1' | 'c_' idx | 'a' j '_' idx | 'D(' idx (',' idx)+ ')'
// Indices are 1-based; divisor numbers j are 1-based.
SurfaceClass TautRing::parse(std::string_view text, int arity) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what);
  };
  auto peek = [&]() { return pos < s.size() ? s[pos] : '\0'; };
  auto number = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return s.substr(start, pos - start);
  };
  auto index = [&]() {
    const int v = std::stoi(number());
    if (v < 1 || v > arity) fail("index out of range");
    return v - 1;
  };
  auto factor = [&]() -> SurfaceClass {
    const char ch = peek();
    if (ch == 'c') {
      ++pos;
      if (peek() != '_') fail("expected '_'");
      ++pos;
      return point(arity, index());
    }
    if (ch == 'a') {
      ++pos;
      const int j = std::stoi(number());
      if (j < 1 || j > lattice_.rank()) fail("divisor number out of range");
      if (peek() != '_') fail("expected '_'");
      ++pos;
      return divisor(arity, index(), j - 1);
    }
    if (ch == 'D') {
      ++pos;
      if (peek() != '(') fail("expected '('");
      ++pos;
      std::vector<int> idx{index()};
      while (peek() == ',') {
        ++pos;
        idx.push_back(index());
      }
      if (peek() != ')') fail("expected ')'");
      ++pos;
      if (idx.size() < 2) fail("diagonal needs two indices");
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated diagonal index");
      return small_diagonal(arity, idx);
    }
    fail("unexpected character");
    return SurfaceClass(arity);
  };
  SurfaceClass total(arity);
  if (s.empty()) fail("empty input");
  bool first = true;
  while (pos < s.size()) {
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = sign;
    SurfaceClass term = SurfaceClass::one(arity);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational q{mpz_class(number())};
      if (peek() == '/') {
        ++pos;
        const mpz_class den(number());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      coef *= q;
      if (peek() == '*') {
        ++pos;
        term = factor();
      }
    } else {
      term = factor();
    }
    while (peek() == '*') {
      ++pos;
      if (peek() == '1') {
        ++pos;
        continue;
      }
      term = mul(term, factor());
    }
    total += term * coef;
  }
  return total;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto append = [&](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for (const auto& [i, j] : m.matching()) {
    append("D(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  for (const auto& [i, l] : m.labels()) {
    if (l.kind == Label::Kind::kPoint) {
      append("c_" + std::to_string(i + 1));
    } else {
      append("a" + std::to_string(l.div + 1) + "_" + std::to_string(i + 1));
    }
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const SurfaceClass& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.sorted_terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(m);
    if (mag == 1) {
      out += mono;
    } else if (mono == "1") {
      out += mag.get_str();
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace k3fock::taut
