#pragma once

#include <gmpxx.h>

#include <string>

namespace k3fock {

/// Exact rational with unbounded numerator and denominator.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// n! as a rational, n >= 0.
inline Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace k3fock
