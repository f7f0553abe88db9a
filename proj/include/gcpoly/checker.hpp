#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gcpoly/freealg.hpp"
#include "gcpoly/matalg.hpp"

namespace gcpoly {

enum class VerdictStatus { Identity, Central, Neither };

const char* verdict_status_name(VerdictStatus s);

struct BudgetNote {
  int budget = 0;     // budget the verdict was computed at
  int stable_at = 0;  // re-checked at this larger budget
  bool stable = true;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Identity;
  // Non-identities come with a substitution where f has a nonzero value.
  std::map<GVar, RingMatrix> evidence;
  std::optional<RingMatrix> value;  // f at the evidence
  // For Neither: a homogeneous partner that fails to commute with value.
  std::optional<std::pair<GVar, RingMatrix>> partner;
  std::optional<BudgetNote> budget;  // Grassmann-entry algebras only
};

struct CheckOptions {
  bool ordinary = false;        // forget the grading (variables untagged)
  bool stability_probe = true;  // re-run Grassmann verdicts at budget+2
  bool want_evidence = true;
  unsigned seed = 12345;  // scaling search during evidence recovery
};

// Graded polynomial identity test by exhausting homogeneous basis
// substitutions of every full multilinearization. Exact for scalar
// algebras; for Grassmann-entry algebras the verdict covers all
// substitutions whose odd parts fit the budget (and the reduction makes
// that exhaustive whenever the budget admits one generator per odd slot).
bool is_graded_identity(const GPolynomial& f, const GradedMatrixAlgebra& A,
                        const CheckOptions& opt = {});

// Identity / central (all values commute with the whole algebra) / neither.
Verdict check_graded_central(const GPolynomial& f, const GradedMatrixAlgebra& A,
                             const CheckOptions& opt = {});

struct OrdinaryReport {
  Verdict verdict;
  // For block-graded Grassmann algebras: the Z_2-component every nonzero
  // value of f lies in, when there is one.
  std::optional<int> component;
};

// The ungraded question for a polynomial with untagged variables.
OrdinaryReport check_central_ordinary(const GPolynomial& f,
                                      const GradedMatrixAlgebra& A,
                                      const CheckOptions& opt = {});

// Scalar algebras: when every basis value of every multilinear piece of f
// sits on a single scalar line, returns a normalized spanning matrix.
std::optional<RingMatrix> scalar_line_certificate(const GPolynomial& f,
                                                  const GradedMatrixAlgebra& A);

// All basis values of the multilinear pieces proportional to P.
bool values_on_line(const GPolynomial& f, const GradedMatrixAlgebra& A,
                    const RingMatrix& P);

// All nonzero basis values homogeneous of the given block parity.
bool values_in_component(const GPolynomial& f, const GradedMatrixAlgebra& A,
                         int parity, bool ordinary = false);

enum class ClassifyStatus { Holds, Fails, Unsupported };

const char* classify_status_name(ClassifyStatus s);

struct WitnessCertificate {
  GPolynomial f;  // graded central, not an identity, and not central
  RingMatrix P;   // invertible diagonal spanning the value line, P^k = 1
  int k = 0;      // number of disjoint copies multiplied to reach a central value
  Character lambda;
  std::string note;
};

struct ClassifyResult {
  ClassifyStatus status = ClassifyStatus::Unsupported;
  std::optional<WitnessCertificate> certificate;
  int aut_order = 0;
  std::vector<std::vector<int>> orbits;
  bool crossed = false;
  std::string detail;
};

// Decides whether "f g graded central implies f and g graded central" can
// fail over the scalar matrix algebra, for a pairwise distinct grading
// tuple. torsion_r is the root-of-unity order carried by the session
// field. Failure comes with a verified certificate; repeated tuples
// report Unsupported.
ClassifyResult classify_primeness(const GradedMatrixAlgebra& A, int torsion_r);

struct TransferReport {
  bool identity_mnf = false;
  bool identity_mab = false;
  bool agree = false;
  GPolynomial transformed;

  TransferReport(GPolynomial t) : transformed(std::move(t)) {}
};

// For multilinear f over a group of order two: f is an identity of the
// two-block scalar algebra M_{a+b}(F) exactly when its crossing-reweighted
// form is an identity of M_{a,b}(E). Reports both sides.
TransferReport transfer_check(const GPolynomial& f, int a, int b, int budget,
                              int conductor);

struct ScanPair {
  GPolynomial f, g;
  VerdictStatus fstatus, gstatus;
};

struct ScanReport {
  long pairs = 0;
  long central_products = 0;
  long counterexample_count = 0;  // central product with a non-central factor
  std::vector<ScanPair> counterexamples;  // capped at 10
  std::vector<ScanPair> central_pairs;    // capped at 10
};

// Exhaustive scan over pairs of multihomogeneous polynomials with
// coefficients drawn from coeffset, degree patterns over the support,
// total degree per factor <= maxdeg (<= 3). Factors get disjoint
// variables; whenever the product is graded central the factors are
// checked too.
ScanReport primeness_scan(const GradedMatrixAlgebra& A, int maxdeg,
                          const std::vector<CycloScalar>& coeffset,
                          const CheckOptions& opt = {});

}  // namespace gcpoly
