#pragma once

#include <gmpxx.h>

#include <string>

namespace gammastar {

using Integer = mpz_class;

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gammastar
