#pragma once

#include <string>

#include "json.hpp"

#include "gcpoly/checker.hpp"
#include "gcpoly/regular.hpp"

namespace gcpoly::report {

using nlohmann::json;

// Every report carries the algebra echo with conductor and budget.
json algebra_info(const GradedMatrixAlgebra& A);

json matrix_json(const RingMatrix& m);
json polynomial_json(const GPolynomial& f);
json verdict_json(const Verdict& v);

json identity_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                     const Verdict& v, bool ordinary);
json central_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                    const Verdict& v, bool ordinary);
json classify_report(const GradedMatrixAlgebra& A, int torsion,
                     const ClassifyResult& r);
json aut_report(const GradedMatrixAlgebra& A);
json witness_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                    const RingMatrix& value);
json transform_report(const GPolynomial& f, const GPolynomial& out,
                      const Bicharacter& beta, const std::string& pairing);
json envelope_report(const GradedMatrixAlgebra& built, bool ok);
json scan_report(const GradedMatrixAlgebra& A, int maxdeg,
                 const ScanReport& r);
json eval_report(const GradedMatrixAlgebra& A, const GPolynomial& f,
                 const std::map<GVar, RingMatrix>& assign,
                 const RingMatrix& value);
json error_report(const Error& e);

// Human-readable rendering of any of the above.
std::string prose(const json& rep);

}  // namespace gcpoly::report
