#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gcpoly/bicharacter.hpp"
#include "gcpoly/error.hpp"
#include "gcpoly/freealg.hpp"

using namespace gcpoly;

namespace {

GroupPtr z2() { return FiniteGroup::cyclic_product({2}); }

GPolynomial var(const GroupPtr& g, int i, int d) {
  return GPolynomial::variable(g, i, d);
}

GPolynomial comm(const GPolynomial& a, const GPolynomial& b) {
  return a * b - b * a;
}

// random multihomogeneous polynomial: a fixed multidegree, a handful of
// arrangements of the corresponding letter multiset, small coefficients
GPolynomial random_multihomogeneous(std::mt19937& rng, const GroupPtr& g,
                                    int maxdeg) {
  int nvars = 1 + (int)(rng() % 3);
  std::vector<GVar> letters;
  for (int v = 1; v <= nvars; ++v) {
    int mult = 1 + (int)(rng() % 2);
    int tag = (int)(rng() % g->order());
    for (int k = 0; k < mult && (int)letters.size() < maxdeg; ++k)
      letters.push_back({v, tag});
  }
  GPolynomial f(g);
  int terms = 1 + (int)(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    GMonomial m = letters;
    std::shuffle(m.begin(), m.end(), rng);
    long c = (long)(rng() % 5) - 2;
    if (c == 0) c = 1;
    f += GPolynomial::monomial(g, m, CycloScalar(c));
  }
  return f;
}

}  // namespace

TEST_CASE("canonical arithmetic") {
  auto g = z2();
  auto x1 = var(g, 1, 1), x2 = var(g, 2, 1);
  CHECK(x1 * x2 - x1 * x2 == GPolynomial(g));
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x1 * x2 + x2 * x1 - x2 * x2);
  CHECK((x1 * x2).terms().size() == 1);
  GPolynomial s = x1;
  s.scale(CycloScalar(0));
  CHECK(s.is_zero());
}

TEST_CASE("degrees and homogeneity") {
  auto g = z2();
  auto xe = var(g, 1, 0), xg = var(g, 2, 1);
  int d = -1;
  CHECK((xg * xg).is_homogeneous(&d));
  CHECK(d == 0);  // g * g = e in Z_2
  CHECK_FALSE((xe + xg).is_homogeneous());
  CHECK((xe * xg + xg * xe).is_homogeneous(&d));
  CHECK(d == 1);
  CHECK((xe * xg).is_multilinear());
  CHECK_FALSE((xg * xg).is_multilinear());
  CHECK((xg * xg).is_multihomogeneous());
  CHECK_FALSE((xe + xe * xe).is_multihomogeneous());
}

TEST_CASE("one index may not carry two tags") {
  auto g = z2();
  CHECK_THROWS_AS(var(g, 1, 0) + var(g, 1, 1), Error);
  CHECK_THROWS_AS(var(g, 1, 0) * var(g, 1, 1), Error);
  CHECK_NOTHROW(var(g, 1, 1) * var(g, 1, 1));
}

TEST_CASE("multihomogeneous split") {
  auto g = FiniteGroup::trivial();
  auto x1 = var(g, 1, g->identity());
  auto parts = (x1 + x1 * x1).multihomogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] + parts[1] == x1 + x1 * x1);

  auto x2 = var(g, 2, g->identity());
  CHECK(comm(x1, x2).multihomogeneous_components().size() == 1);
}

TEST_CASE("multilinearization") {
  auto g = FiniteGroup::trivial();
  auto x1 = var(g, 1, g->identity());
  auto x2 = var(g, 2, g->identity());

  CHECK((x1 * x2).multilinearize() == x1 * x2);

  auto cube = (x1 * x1 * x1).multilinearize();
  REQUIRE(cube.terms().size() == 6);  // all orderings of three fresh letters
  for (const auto& [m, c] : cube.terms()) {
    CHECK(c == CycloScalar(1));
    CHECK(m.size() == 3);
  }
  CHECK(cube.is_multilinear());
}

TEST_CASE("polarization recovers the polynomial times factorials") {
  auto g = z2();
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    GPolynomial f = random_multihomogeneous(rng, g, 5);
    if (f.is_zero()) continue;
    GPolynomial lin = f.multilinearize();

    // fresh letters are numbered consecutively per original variable
    std::map<GVar, GPolynomial> back;
    long factorials = 1;
    int next = 1;
    std::map<GVar, int> deg = GPolynomial::multidegree(f.terms().begin()->first);
    for (const auto& [v, d] : deg) {
      for (long k = 2; k <= d; ++k) factorials *= k;
      for (int k = 0; k < d; ++k)
        back.emplace(GVar{next++, v.degree}, var(g, v.index, v.degree));
    }
    GPolynomial expect = f;
    expect.scale(CycloScalar(factorials));
    CHECK(lin.substitute(back) == expect);
  }
}

TEST_CASE("substitution checks degrees") {
  auto g = z2();
  auto x1 = var(g, 1, 1);
  std::map<GVar, GPolynomial> bad{{GVar{1, 1}, var(g, 5, 0)}};
  CHECK_THROWS_AS(x1.substitute(bad), Error);
  std::map<GVar, GPolynomial> zero{{GVar{1, 1}, GPolynomial(g)}};
  CHECK(x1.substitute(zero).is_zero());
  std::map<GVar, GPolynomial> inhom{{GVar{1, 1}, var(g, 5, 1) + var(g, 6, 0)}};
  CHECK_THROWS_AS(x1.substitute(inhom), Error);
}

TEST_CASE("derivation split") {
  auto g = FiniteGroup::trivial();
  int e = g->identity();
  auto x1 = var(g, 1, e);

  auto parts = derivation_components(x1 * x1);
  REQUIRE(parts.size() == 1);
  const auto& p1 = parts.at(GVar{1, e});
  auto z = GPolynomial::variable(g, p1.z.index, e);
  CHECK(p1.h == z * x1 + x1 * z);
  CHECK(p1.z.index == 2);  // right after the largest index of f

  auto x2 = var(g, 2, e);
  auto parts2 = derivation_components(x1 * x2 * x1);
  const auto& q = parts2.at(GVar{2, e});
  auto zq = GPolynomial::variable(g, q.z.index, e);
  CHECK(q.h == x1 * zq * x1);
}

TEST_CASE("commutator against a fresh letter expands through derivations") {
  auto g = z2();
  std::mt19937 rng(99);
  int checked = 0;
  for (int round = 0; checked < 50; ++round) {
    GPolynomial f = random_multihomogeneous(rng, g, 5);
    if (f.is_zero()) continue;
    ++checked;

    auto parts = derivation_components(f);
    int wi = f.max_index() + (int)parts.size() + 1;
    GPolynomial w = var(g, wi, g->identity());

    GPolynomial rhs(g);
    for (const auto& [v, part] : parts) {
      GPolynomial xv = var(g, v.index, v.degree);
      std::map<GVar, GPolynomial> sub{{part.z, comm(xv, w)}};
      rhs += part.h.substitute(sub);
    }
    CHECK(comm(f, w) == rhs);
  }
}

TEST_CASE("index shift") {
  auto g = z2();
  auto f = var(g, 1, 1) * var(g, 2, 0);
  auto s = f.shift_indices(10);
  CHECK(s.max_index() == 12);
  CHECK(s.variables() == std::vector<GVar>{{11, 1}, {12, 0}});
}

TEST_CASE("crossing scalars") {
  auto h2 = FiniteGroup::cyclic_product({2}, true);
  Bicharacter beta = Bicharacter::grassmann_sign(h2);

  // sorting two odd letters past each other costs a sign
  std::map<GVar, int> hdeg{{GVar{1, 1}, 1}, {GVar{2, 1}, 1}};
  GMonomial sorted{{1, 1}, {2, 1}};
  GMonomial swapped{{2, 1}, {1, 1}};
  CHECK(crossing_scalar(sorted, hdeg, beta) == CycloScalar(1));
  CHECK(crossing_scalar(swapped, hdeg, beta) == CycloScalar(-1));

  // neutral assignment changes nothing
  std::map<GVar, int> ezero{{GVar{1, 1}, 0}, {GVar{2, 1}, 0}};
  CHECK(crossing_scalar(swapped, ezero, beta) == CycloScalar(1));

  // multiplicative across blocks with separated index ranges
  std::map<GVar, int> hdeg4{{GVar{1, 1}, 1}, {GVar{2, 1}, 1},
                            {GVar{3, 1}, 1}, {GVar{4, 1}, 1}};
  GMonomial m1{{2, 1}, {1, 1}};
  GMonomial m2{{4, 1}, {3, 1}};
  GMonomial m12 = m1;
  m12.insert(m12.end(), m2.begin(), m2.end());
  CHECK(crossing_scalar(m12, hdeg4, beta) ==
        crossing_scalar(m1, hdeg4, beta) * crossing_scalar(m2, hdeg4, beta));
}

TEST_CASE("envelope reweighting") {
  auto h2 = FiniteGroup::cyclic_product({2}, true);
  Bicharacter beta = Bicharacter::grassmann_sign(h2);
  auto x1 = var(h2, 1, 1), x2 = var(h2, 2, 1);

  CHECK(envelope_transform(comm(x1, x2), beta) == x1 * x2 + x2 * x1);

  auto y1 = var(h2, 1, 0), y2 = var(h2, 2, 0);
  CHECK(envelope_transform(comm(y1, y2), beta) == comm(y1, y2));

  CHECK_THROWS_AS(envelope_transform(x1 * x1, beta), Error);
}

TEST_CASE("substitution instances of factors multiply into the product") {
  auto g = z2();
  auto f = var(g, 1, 1) * var(g, 2, 1);
  auto h = var(g, 3, 0) * var(g, 3, 0);

  std::map<GVar, GPolynomial> mf{
      {GVar{1, 1}, var(g, 7, 1) + var(g, 8, 1)}};
  std::map<GVar, GPolynomial> mh{{GVar{3, 0}, var(g, 9, 0) * var(g, 10, 0)}};

  GPolynomial fprime = f.substitute(mf);
  GPolynomial hprime = h.substitute(mh);

  std::map<GVar, GPolynomial> both = mf;
  both.insert(mh.begin(), mh.end());
  CHECK(fprime * hprime == (f * h).substitute(both));
}
