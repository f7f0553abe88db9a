#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "gcpoly/error.hpp"
#include "gcpoly/regular.hpp"

using namespace gcpoly;

namespace {

// exact row rank by Gaussian elimination
int rank(std::vector<std::vector<CycloScalar>> rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  int r = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    CycloScalar inv = rows[r][c].inverse();
    for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == (size_t)r || rows[i][c].is_zero()) continue;
      CycloScalar f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

Bicharacter corrupted_z2() {
  auto z2 = FiniteGroup::cyclic_product({2}, true);
  // breaks skew-symmetry: beta(1,1) should be its own inverse partner
  std::vector<std::vector<CycloScalar>> t = {
      {CycloScalar(1), CycloScalar(1)},
      {CycloScalar(1), CycloScalar(2)}};
  return Bicharacter(z2, t);
}

}  // namespace

TEST_CASE("pairing axioms") {
  auto z2 = FiniteGroup::cyclic_product({2}, true);
  CHECK(Bicharacter::grassmann_sign(z2).validate_axioms());
  CHECK(Bicharacter::trivial(z2).validate_axioms());

  auto z22 = FiniteGroup::cyclic_product({2, 2});
  CHECK(Bicharacter::pauli(2, z22).validate_axioms());
  auto z33 = FiniteGroup::cyclic_product({3, 3});
  CHECK(Bicharacter::pauli(3, z33).validate_axioms());

  std::string why;
  CHECK_FALSE(corrupted_z2().validate_axioms(&why));
  CHECK(!why.empty());
}

TEST_CASE("minimality of the pairing") {
  auto z2 = FiniteGroup::cyclic_product({2}, true);
  CHECK(pairing_is_minimal(Bicharacter::grassmann_sign(z2)));
  CHECK_FALSE(pairing_is_minimal(Bicharacter::trivial(z2)));
  auto z22 = FiniteGroup::cyclic_product({2, 2});
  CHECK(pairing_is_minimal(Bicharacter::pauli(2, z22)));
  auto z33 = FiniteGroup::cyclic_product({3, 3});
  CHECK(pairing_is_minimal(Bicharacter::pauli(3, z33)));
}

TEST_CASE("nonzero products in prescribed degrees") {
  auto E = grassmann_grading(3);
  auto w = nonzero_product_witness(E, {1, 1, 1});
  REQUIRE(w.size() == 3);
  GrassmannElement prod = GrassmannElement::scalar(3, CycloScalar(1));
  for (const auto& v : w) {
    int parity = -1;
    CHECK(std::get<GrassmannElement>(v).is_homogeneous(&parity));
    CHECK(parity == 1);
    prod *= std::get<GrassmannElement>(v);
  }
  CHECK_FALSE(prod.is_zero());

  auto even = nonzero_product_witness(E, {0, 0});
  REQUIRE(even.size() == 2);
  for (const auto& v : even)
    CHECK(std::get<GrassmannElement>(v) ==
          GrassmannElement::scalar(3, CycloScalar(1)));

  CHECK_THROWS_AS(nonzero_product_witness(grassmann_grading(2), {1, 1, 1}),
                  Error);

  auto P2 = pauli_grading(2, 2);
  auto xy = nonzero_product_witness(P2, {2, 1});  // degrees (1,0), (0,1)
  REQUIRE(xy.size() == 2);
  auto X = std::get<RingMatrix>(xy[0]);
  auto Y = std::get<RingMatrix>(xy[1]);
  CHECK_FALSE((X * Y).is_zero());
}

TEST_CASE("clock and shift matrices") {
  auto P2 = pauli_grading(2, 2);
  auto X = std::get<RingMatrix>(realization_component_basis(P2, 2)[0]);
  auto Y = std::get<RingMatrix>(realization_component_basis(P2, 1)[0]);

  auto diag = RingMatrix::scalar_unit(2, 0, 0, 0) -
              RingMatrix::scalar_unit(2, 0, 1, 1);
  auto flip = RingMatrix::scalar_unit(2, 0, 0, 1) +
              RingMatrix::scalar_unit(2, 0, 1, 0);
  CHECK(X == diag);
  CHECK(Y == flip);
  CHECK(X * Y == -(Y * X));

  // trivial pairing on one point
  auto P1 = pauli_grading(1, 1);
  CHECK(P1.H->order() == 1);
  CHECK(realization_component_basis(P1, 0).size() == 1);

  CHECK_THROWS_AS(pauli_grading(3, 2), Error);
  try {
    pauli_grading(3, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConductorMismatch);
  }
}

TEST_CASE("clock and shift span the matrix algebra") {
  for (int m : {2, 3}) {
    auto spec = pauli_grading(m, m);
    std::vector<std::vector<CycloScalar>> rows;
    for (int h = 0; h < m * m; ++h) {
      auto basis = realization_component_basis(spec, h);
      REQUIRE(basis.size() == 1);
      const auto& M = std::get<RingMatrix>(basis[0]);
      std::vector<CycloScalar> row;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) row.push_back(M.at(i, j).scalar_part());
      rows.push_back(std::move(row));
    }
    CHECK(rank(rows) == m * m);
  }
}

TEST_CASE("commutation law") {
  CHECK(commutation_law_holds(grassmann_grading(5)));
  CHECK(commutation_law_holds(pauli_grading(2, 2)));
  CHECK(commutation_law_holds(pauli_grading(3, 3)));

  auto broken = grassmann_grading(3);
  broken.beta = corrupted_z2();
  std::string why;
  CHECK_FALSE(commutation_law_holds(broken, &why));
  CHECK(!why.empty());
}

TEST_CASE("products of non-identity monomials stay nonzero") {
  auto E = grassmann_grading(4);
  GMonomial m1{{1, 1}};
  GMonomial m2{{2, 1}};
  auto rep = monomial_primeness(E, m1, m2);
  CHECK(rep.holds);
  CHECK_FALSE(rep.vacuous);

  // an odd square vanishes identically, so the test is vacuous
  GMonomial sq{{1, 1}, {1, 1}};
  auto rep2 = monomial_primeness(E, sq, m2);
  CHECK(rep2.vacuous);

  auto P2 = pauli_grading(2, 2);
  GMonomial p1{{1, 2}};  // degree (1,0)
  GMonomial p2{{2, 1}};  // degree (0,1)
  auto rep3 = monomial_primeness(P2, p1, p2);
  CHECK(rep3.holds);
}

TEST_CASE("center against the neutral component") {
  for (int m : {2, 3, 4}) {
    auto rep = center_equals_neutral(pauli_grading(m, m));
    CHECK(rep.equals_neutral);
    CHECK(rep.exact);
  }

  // even budget: verdict positive but only within the budget
  auto rep6 = center_equals_neutral(grassmann_grading(6));
  CHECK(rep6.equals_neutral);
  CHECK_FALSE(rep6.exact);

  // odd budget: the top monomial is odd yet central
  auto rep5 = center_equals_neutral(grassmann_grading(5));
  CHECK_FALSE(rep5.equals_neutral);
  CHECK(!rep5.detail.empty());

  // grading forgotten: generators sit in the neutral part but are not central
  auto rep_un = center_equals_neutral(grassmann_grading(4, false));
  CHECK_FALSE(rep_un.equals_neutral);
}

TEST_CASE("spec descriptions") {
  CHECK(grassmann_grading(6).describe() == "grassmann budget=6");
  CHECK(pauli_grading(3, 3).describe() == "pauli m=3");
  CHECK(realization_element_str(RealizationElement(
            GrassmannElement::scalar(2, CycloScalar(1)))) == "1");
}
