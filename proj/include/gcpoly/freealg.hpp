#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gcpoly/bicharacter.hpp"
#include "gcpoly/cyclo.hpp"
#include "gcpoly/group.hpp"

namespace gcpoly {

// A generator x_{i,g} of the free group-graded algebra: the same index with
// two different tags is two different free variables.
struct GVar {
  int index;   // >= 1
  int degree;  // group element
  auto operator<=>(const GVar&) const = default;
};

using GMonomial = std::vector<GVar>;

// Length first, then lexicographic: the order used for term storage and
// printing.
bool monomial_less(const GMonomial& a, const GMonomial& b);

struct MonomialOrder {
  bool operator()(const GMonomial& a, const GMonomial& b) const {
    return monomial_less(a, b);
  }
};

// Polynomials in the free graded algebra F<x_{i,g}> over cyclotomic
// rationals. Terms with zero coefficient are never stored.
class GPolynomial {
 public:
  using TermMap = std::map<GMonomial, CycloScalar, MonomialOrder>;

  explicit GPolynomial(GroupPtr group);
  static GPolynomial variable(const GroupPtr& g, int index, int degree);
  static GPolynomial constant(const GroupPtr& g, const CycloScalar& c);
  static GPolynomial monomial(const GroupPtr& g, GMonomial m, const CycloScalar& c);

  const GroupPtr& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GPolynomial operator-() const;
  GPolynomial& operator+=(const GPolynomial& o);
  GPolynomial& operator-=(const GPolynomial& o);
  GPolynomial& operator*=(const GPolynomial& o);
  GPolynomial& scale(const CycloScalar& c);

  friend GPolynomial operator+(GPolynomial a, const GPolynomial& b) { return a += b; }
  friend GPolynomial operator-(GPolynomial a, const GPolynomial& b) { return a -= b; }
  friend GPolynomial operator*(GPolynomial a, const GPolynomial& b) { return a *= b; }

  bool operator==(const GPolynomial& o) const;
  bool operator!=(const GPolynomial& o) const { return !(*this == o); }

  // Product of the letter tags, left to right.
  int monomial_group_degree(const GMonomial& m) const;
  // All monomials share one group degree (constants are neutral).
  bool is_homogeneous(int* degree = nullptr) const;

  static std::map<GVar, int> multidegree(const GMonomial& m);
  bool is_multihomogeneous() const;
  bool is_multilinear() const;

  // Distinct generators used, sorted.
  std::vector<GVar> variables() const;
  int max_index() const;

  GPolynomial shift_indices(int offset) const;

  // Replaces generators by polynomials. Every substituted value must be
  // homogeneous of the generator's degree (zero passes); unmapped
  // generators stay put. Throws DegreeMismatch.
  GPolynomial substitute(const std::map<GVar, GPolynomial>& assign) const;

  // Split into multihomogeneous parts, deterministic order.
  std::vector<GPolynomial> multihomogeneous_components() const;

  // Full multilinearization of a multihomogeneous polynomial: the i-th
  // generator (in sorted order, multiplicity d_i) is replaced by d_i fresh
  // generators numbered consecutively from 1, one per occurrence, summed
  // over all ways to distribute them. Evaluating the result with every
  // fresh copy set to the original value gives (prod d_i!) * f.
  GPolynomial multilinearize() const;

  std::string str() const;

 private:
  GroupPtr group_;
  TermMap terms_;

  void insert_(const GMonomial& m, const CycloScalar& c);
  // One polynomial may not use the same index under two different tags.
  void check_tags_() const;
};

struct DerivationPart {
  GVar z;         // doubled variable, same tag as the original
  GPolynomial h;  // linear in z
};

// For each generator x of f, the sum of copies of each monomial with one
// occurrence of x at a time replaced by the doubled variable z. The z
// indices start right after max_index(). Satisfies
//   [f, w] = sum_x h_x(..., z := [x, w]).
std::map<GVar, DerivationPart> derivation_components(const GPolynomial& f);

// Commutation factor collected when the letters of m are sorted by index:
// one beta(h_p, h_q) per position pair p < q whose indices are out of order,
// where h is the letter's assigned degree in beta's group.
CycloScalar crossing_scalar(const GMonomial& m, const std::map<GVar, int>& hdeg,
                            const Bicharacter& beta);

// Reweights every term of f by its crossing scalar for the given degree
// assignment.
GPolynomial apply_crossing_scalars(const GPolynomial& f,
                                   const std::map<GVar, int>& hdeg,
                                   const Bicharacter& beta);

// Same reweighting with the degrees read off the variable tags themselves;
// this is the identity-transfer map into a tensor envelope. Requires f
// multilinear (throws NonMultilinear) and beta's group matching f's.
GPolynomial envelope_transform(const GPolynomial& f, const Bicharacter& beta);

}  // namespace gcpoly
