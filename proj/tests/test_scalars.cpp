#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcpoly/cyclo.hpp"
#include "gcpoly/error.hpp"

using namespace gcpoly;

TEST_CASE("rational construction and arithmetic") {
  CycloScalar a(3), b(Rational(1, 2));
  CHECK((a + b).rational_value() == Rational(7, 2));
  CHECK((a * b).rational_value() == Rational(3, 2));
  CHECK((a - a).is_zero());
  CHECK(CycloScalar(1).is_one());
  CHECK(CycloScalar(2).inverse().rational_value() == Rational(1, 2));
  CHECK((-CycloScalar(5)).rational_value() == -5);
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS_AS(CycloScalar(0).inverse(), Error);
  try {
    CycloScalar(0).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInverse);
  }
}

TEST_CASE("roots of unity satisfy their defining power") {
  for (int m = 1; m <= 12; ++m)
    for (long k = 0; k < m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(CycloScalar::root_of_unity(m, k).pow(m).is_one());
    }
}

TEST_CASE("small root values") {
  CHECK(CycloScalar::root_of_unity(1, 0).is_one());
  CHECK(CycloScalar::root_of_unity(2, 1) == CycloScalar(-1));
  CHECK(CycloScalar::root_of_unity(4, 1).pow(2) == CycloScalar(-1));
  CHECK(CycloScalar::root_of_unity(4, 2) == CycloScalar(-1));
}

TEST_CASE("minimal polynomial relations collapse") {
  CycloScalar z3 = CycloScalar::root_of_unity(3, 1);
  CHECK((CycloScalar(1) + z3 + z3.pow(2)).is_zero());
  CycloScalar z5 = CycloScalar::root_of_unity(5, 1);
  CycloScalar s(0);
  for (int k = 0; k < 5; ++k) s += z5.pow(k);
  CHECK(s.is_zero());
}

TEST_CASE("mixed conductors multiply into the common field") {
  CycloScalar z3 = CycloScalar::root_of_unity(3, 1);
  CycloScalar z4 = CycloScalar::root_of_unity(4, 1);
  CHECK(z3 * z4 == CycloScalar::root_of_unity(12, 7));
  CHECK(z3 + CycloScalar(0) == z3);
  // conductor of a rational-valued expression drops back to 1
  CHECK((z3 * z3 * z3).is_rational());
}

TEST_CASE("inverse of a root is its conjugate power") {
  for (int m = 2; m <= 10; ++m) {
    CycloScalar z = CycloScalar::root_of_unity(m, 1);
    CHECK(z * z.inverse() == CycloScalar(1));
    CHECK(z.inverse() == z.pow(m - 1));
    CHECK(z.pow(-1) == z.inverse());
  }
}

TEST_CASE("cyclotomic polynomial table") {
  using V = std::vector<Rational>;
  CHECK(cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(cyclotomic_polynomial(2) == V{1, 1});
  CHECK(cyclotomic_polynomial(3) == V{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == V{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("euler phi") {
  int expect[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int m = 1; m <= 12; ++m) CHECK(euler_phi(m) == (unsigned long)expect[m]);
}

TEST_CASE("torsion order of the root group") {
  CHECK(torsion_order(1) == 2);   // just +-1 in Q
  CHECK(torsion_order(2) == 2);
  CHECK(torsion_order(3) == 6);   // -zeta_3 has order 6
  CHECK(torsion_order(4) == 4);
  CHECK(torsion_order(5) == 10);
  CHECK(torsion_order(6) == 6);
  CHECK(torsion_order(12) == 12);
}

TEST_CASE("comparison is a strict weak order on samples") {
  std::vector<CycloScalar> xs = {
      CycloScalar(0), CycloScalar(1), CycloScalar(-2),
      CycloScalar::root_of_unity(3, 1), CycloScalar::root_of_unity(3, 2),
      CycloScalar::root_of_unity(4, 1)};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      bool lt = a < b, gt = b < a, eq = a == b;
      CHECK((lt + gt + eq) == 1);
    }
}

TEST_CASE("printing stays readable") {
  CHECK(CycloScalar(Rational(3, 2)).str() == "3/2");
  CHECK(CycloScalar::root_of_unity(3, 1).str() == "z3^1");
  CHECK(CycloScalar(-1).str() == "-1");
}
