#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gcpoly/bicharacter.hpp"
#include "gcpoly/freealg.hpp"
#include "gcpoly/grassmann.hpp"
#include "gcpoly/matalg.hpp"

namespace gcpoly {

// A regular grading presented by its commutation pairing together with a
// concrete realization worked at desk scale: the Grassmann algebra under
// its parity grading, or the clock-and-shift grading of M_m.
struct RegularGradingSpec {
  enum class Realization { Grassmann, Pauli };

  GroupPtr H;
  Bicharacter beta;
  Realization realization;
  int budget = 0;      // Grassmann only
  bool graded = true;  // false: Grassmann with the grading forgotten
  int m = 0;           // Pauli only
  int conductor = 1;

  std::string describe() const;
};

RegularGradingSpec grassmann_grading(int budget, bool graded = true);

// X = diag(1, w, ..., w^{m-1}), Y the cyclic shift, w = zeta_m; XY = wYX
// and the (a,b) component is spanned by X^a Y^b. Requires m to divide the
// session conductor (ConductorMismatch).
RegularGradingSpec pauli_grading(int m, int conductor);

using RealizationElement = std::variant<GrassmannElement, RingMatrix>;

std::string realization_element_str(const RealizationElement& x);

// Basis of the degree-h component of the realization.
std::vector<RealizationElement> realization_component_basis(
    const RegularGradingSpec& spec, int h);

// Every nonidentity degree is separated from some partner by the pairing.
bool pairing_is_minimal(const Bicharacter& beta);

// One homogeneous element per requested degree with nonzero product
// (fresh generators for odd Grassmann slots, powers of X and Y for the
// clock-and-shift case). Throws BudgetExceeded when the generators would
// not fit.
std::vector<RealizationElement> nonzero_product_witness(
    const RegularGradingSpec& spec, const std::vector<int>& degrees);

// Exhaustively confirms u v = beta(h1, h2) v u over component basis pairs.
bool commutation_law_holds(const RegularGradingSpec& spec,
                           std::string* why = nullptr);

struct MonomialPrimenessReport {
  bool holds = false;
  bool vacuous = false;
  std::string detail;
};

// For monomials over disjoint variable sets with degrees read from the
// tags: if neither factor is an identity of the realization, the product
// is not one either; vacuous when a factor already vanishes identically.
MonomialPrimenessReport monomial_primeness(const RegularGradingSpec& spec,
                                           const GMonomial& m1,
                                           const GMonomial& m2);

struct CenterReport {
  bool equals_neutral = false;
  bool exact = false;  // false when the verdict is budget-scoped
  int budget = 0;
  std::string detail;
};

// Compares the centralizer of the realization with its neutral component.
// Exact for the matrix realization; budget-scoped over the Grassmann
// algebra (an odd budget leaves a central top monomial outside the even
// part, and the report says so).
CenterReport center_equals_neutral(const RegularGradingSpec& spec);

}  // namespace gcpoly
