#pragma once

#include <string>
#include <utility>

#include "gcpoly/freealg.hpp"
#include "gcpoly/matalg.hpp"

namespace gcpoly {

// Parses the polynomial syntax used by all command-line entry points:
//
//   poly    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*'? factor)*
//   factor  := base ('^' NAT)*
//   base    := 'x' NAT ('[' NAME ']')?        variable, omitted tag = neutral
//            | NAT ('/' NAT)?                 rational
//            | 'z' NAT ('^' NAT)?             root of unity zeta_m^k
//            | '(' poly ')'
//            | '[' poly ',' poly ']'          commutator pq - qp
//
// Whitespace is free. Printing a polynomial re-parses to the same value.
// Throws SyntaxError (with a position) and UnknownGroupElement.
GPolynomial parse_polynomial(const std::string& text, const GroupPtr& group);

// Scalar-only variant: the polynomial must be constant.
CycloScalar parse_scalar(const std::string& text);

// Matrix values for direct evaluation:
//
//   matrix  := ['-'] mterm (('+' | '-') mterm)*
//   mterm   := mfactor ('*'? mfactor)*
//   mfactor := mbase ('^' NAT)*
//   mbase   := 'E' NAT ',' NAT | 'E' DIGIT DIGIT   matrix unit, 1-based
//            | 'e' NAT                             Grassmann generator
//            | NAT ('/' NAT)? | 'z' NAT ('^' NAT)? | '(' matrix ')'
RingMatrix parse_matrix(const std::string& text, const GradedMatrixAlgebra& A);

// "x3[g] = E12 + E21" style binding for the evaluator.
std::pair<GVar, RingMatrix> parse_assignment(const std::string& text,
                                             const GradedMatrixAlgebra& A);

}  // namespace gcpoly
