#pragma once

#include <string>
#include <vector>

#include "gcpoly/error.hpp"
#include "gcpoly/rational.hpp"

namespace gcpoly {

// Elements of cyclotomic fields Q(zeta_m), stored as rational coordinates in
// the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1}. Every value is kept with
// the least conductor that can represent it (so plain rationals always have
// conductor 1), which makes equality a componentwise comparison.
class CycloScalar {
 public:
  CycloScalar() : conductor_(1), coeffs_{Rational(0)} {}
  CycloScalar(long v) : conductor_(1), coeffs_{Rational(v)} {}
  CycloScalar(int v) : CycloScalar(static_cast<long>(v)) {}
  CycloScalar(const Rational& v) : conductor_(1), coeffs_{v} {}

  // zeta_m^k, canonicalized (e.g. root_of_unity(4, 2) == -1).
  static CycloScalar root_of_unity(int m, long k);

  // Interprets coeffs as a polynomial in zeta_m and canonicalizes. The vector
  // may have any length; it is reduced mod the m-th cyclotomic polynomial.
  static CycloScalar from_coeffs(int m, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return conductor_ == 1; }

  // Requires is_rational().
  const Rational& rational_value() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }

  // Throws ZeroInverse on zero.
  CycloScalar inverse() const;

  // Integer powers; negative exponents go through inverse().
  CycloScalar pow(long e) const;

  bool operator==(const CycloScalar& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }

  // Total order used only to make containers and printouts deterministic.
  bool operator<(const CycloScalar& o) const;

  // Textual form, e.g. "1/2", "-1 + z3^1", "2*z8^3". Never floats.
  std::string str() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)

  void canonicalize_();
};

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
// Cached; safe for concurrent use.
const std::vector<Rational>& cyclotomic_polynomial(int m);

unsigned long euler_phi(int m);

// Order of the group of roots of unity inside Q(zeta_m): m if m is even,
// 2m otherwise (because -1 is always present).
int torsion_order(int conductor);

}  // namespace gcpoly
