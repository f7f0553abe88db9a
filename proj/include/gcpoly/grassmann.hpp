#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcpoly/cyclo.hpp"
#include "gcpoly/error.hpp"

namespace gcpoly {

// Elements of the Grassmann (exterior) algebra on anticommuting generators
// e_1, ..., e_budget with cyclotomic-rational coefficients. Basis monomials
// e_S are subsets stored as bitmasks (bit i-1 marks e_i); multiplication
// picks up the interleaving sign and kills overlapping supports.
class GrassmannElement {
 public:
  explicit GrassmannElement(int budget);
  static GrassmannElement scalar(int budget, const CycloScalar& c);
  static GrassmannElement basis_monomial(int budget, uint64_t mask,
                                         const CycloScalar& c = CycloScalar(1));
  static GrassmannElement generator(int budget, int i);  // e_i, 1-based

  int budget() const { return budget_; }
  const std::map<uint64_t, CycloScalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  CycloScalar scalar_part() const;  // coefficient of the empty monomial

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GrassmannElement& o);
  GrassmannElement& scale(const CycloScalar& c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, const GrassmannElement& b) { return a *= b; }

  bool operator==(const GrassmannElement& o) const {
    return budget_ == o.budget_ && terms_ == o.terms_;
  }
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

  // Z_2-degree by subset size. parity_component(0) keeps even monomials.
  bool is_homogeneous(int* parity = nullptr) const;
  GrassmannElement parity_component(int parity) const;

  std::string str() const;

 private:
  int budget_;
  std::map<uint64_t, CycloScalar> terms_;  // nonzero coefficients only

  void insert_(uint64_t mask, const CycloScalar& c);
};

// Sign of e_A * e_B; 0 if the supports overlap.
int wedge_sign(uint64_t a, uint64_t b);

// One product of fresh generators per slot realizing the parity pattern with
// pairwise disjoint supports: odd slots get a new single generator, even
// slots get 1. Throws BudgetExceeded if the odd slots outnumber the budget.
std::vector<GrassmannElement> parity_representatives(
    int budget, const std::vector<int>& parities);

}  // namespace gcpoly
