#pragma once

#include <gmpxx.h>

#include <string>

namespace necklace {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest terms, "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace necklace
