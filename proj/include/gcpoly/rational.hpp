#pragma once

#include <gmpxx.h>

#include <string>

namespace gcpoly {

// Exact rational numbers. GMP already canonicalizes a/b after arithmetic,
// so equality is plain comparison.
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
  return q.get_str();
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  unsigned long k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace gcpoly
