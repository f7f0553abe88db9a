#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcpoly/freealg.hpp"
#include "gcpoly/grassmann.hpp"
#include "gcpoly/group.hpp"

namespace gcpoly {

// Grading of n x n matrices induced by a tuple (g_1, ..., g_n): the matrix
// unit E_ij is homogeneous of degree g_i^{-1} g_j. Indices are 0-based in
// code and 1-based in printouts.
struct ElementaryGrading {
  GroupPtr group;
  std::vector<int> tuple;

  ElementaryGrading(GroupPtr g, std::vector<int> t);

  int n() const { return static_cast<int>(tuple.size()); }
  int degree_of(int i, int j) const {
    return group->op(group->inv(tuple[i]), tuple[j]);
  }
  bool pairwise_distinct() const;
  std::vector<int> support() const;  // distinct cell degrees, sorted
};

enum class AlgebraKind { MnF, MnE, Mab };

const char* algebra_kind_name(AlgebraKind k);

// The three families of graded matrix algebras the checker evaluates in:
//   MnF: scalar entries, elementary grading by the tuple;
//   MnE: Grassmann entries, graded by the same elementary shape;
//   Mab: (a+b) x (a+b) Grassmann entries, Z_2-graded with even entries on
//        the diagonal blocks and odd entries off them.
struct GradedMatrixAlgebra {
  AlgebraKind kind;
  int n;
  int a = 0, b = 0;
  ElementaryGrading grading;
  int conductor = 1;
  int budget = 0;

  static GradedMatrixAlgebra mnf(ElementaryGrading g, int conductor = 1);
  static GradedMatrixAlgebra mne(ElementaryGrading g, int conductor, int budget);
  static GradedMatrixAlgebra mab(int a, int b, int conductor, int budget);

  const GroupPtr& group() const { return grading.group; }
  bool grassmann_entries() const { return kind != AlgebraKind::MnF; }
  std::vector<int> support() const { return grading.support(); }
  GradedMatrixAlgebra with_budget(int newbudget) const;
  std::string describe() const;
};

// Dense matrix with Grassmann entries (budget 0 entries are scalars).
class RingMatrix {
 public:
  RingMatrix(int n, int budget);
  static RingMatrix identity(int n, int budget);
  static RingMatrix unit(int n, int budget, int i, int j,
                         const GrassmannElement& v);
  static RingMatrix scalar_unit(int n, int budget, int i, int j,
                                const CycloScalar& c = CycloScalar(1));

  int n() const { return n_; }
  int budget() const { return budget_; }
  GrassmannElement& at(int i, int j) { return e_[i * n_ + j]; }
  const GrassmannElement& at(int i, int j) const { return e_[i * n_ + j]; }

  RingMatrix operator-() const;
  RingMatrix& operator+=(const RingMatrix& o);
  RingMatrix& operator-=(const RingMatrix& o);
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix& scale(const CycloScalar& c);
  RingMatrix pow(int k) const;

  friend RingMatrix operator+(RingMatrix x, const RingMatrix& y) { return x += y; }
  friend RingMatrix operator-(RingMatrix x, const RingMatrix& y) { return x -= y; }

  bool operator==(const RingMatrix& o) const;
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_diagonal() const;

  std::string str() const;

 private:
  int n_;
  int budget_;
  std::vector<GrassmannElement> e_;
};

// Basis of the degree component: one matrix per admissible (cell, Grassmann
// monomial) pair, cells row-major, monomial masks ascending.
std::vector<RingMatrix> homogeneous_basis(const GradedMatrixAlgebra& A, int degree);

bool is_homogeneous_of_degree(const GradedMatrixAlgebra& A, const RingMatrix& M,
                              int degree);

bool is_central_element(const GradedMatrixAlgebra& A, const RingMatrix& M);

// Permutations sigma with deg(sigma(i), sigma(j)) = deg(i, j) everywhere,
// i.e. those whose conjugation preserves the grading. Sorted, identity
// first. Throws SizeLimit for n > 8.
std::vector<Permutation> graded_automorphisms(const ElementaryGrading& g);

struct CrossedProductInfo {
  bool crossed = false;
  std::string reason;
  // On success: pairs (support element, automorphism) realizing the
  // regular action of the support on the normalized tuple positions.
  std::vector<std::pair<int, Permutation>> correspondence;
};

// Decides whether the grading is a crossed product, which for pairwise
// distinct tuples happens exactly when the automorphism count reaches n.
// Throws PreconditionViolated on repeated tuple entries.
CrossedProductInfo is_crossed_product(const ElementaryGrading& g);

// Diagonal matrix with chi(sigma) at position sigma(rep), summed over all
// automorphisms in H.
RingMatrix character_orbit_diagonal(const PermutationGroup& H,
                                    const Character& chi, int rep);

// The n-term cyclic polynomial f = sum_i p_i x_i x_{i+1} ... x_{i+n-1}
// (indices mod n) whose evaluation at E_{12}, E_{23}, ..., E_{n1} equals
// diag(p). Requires a pairwise distinct tuple and a diagonal that every
// graded automorphism fixes up to a scalar.
GPolynomial witness_polynomial(const ElementaryGrading& g,
                               const std::vector<CycloScalar>& p);

// Push the tuple through a homomorphism given by images of every group
// element. Throws NotHomomorphism.
ElementaryGrading coarsen(const ElementaryGrading& g, const GroupPtr& target,
                          const std::vector<int>& images);

// Builds M_{a,b}(E) as the graded tensor square of a Z_2-graded M_n(F)
// (tuple must be sorted: identity block first, else TupleNotSorted) with
// the Grassmann algebra, identifying e_S E_ij with E_ij (x) e_S, and
// verifies on basis pairs that both multiplication tables agree.
GradedMatrixAlgebra envelope(const GradedMatrixAlgebra& mnf_z2, int budget);

// Evaluate f with every generator bound to a homogeneous matrix of its tag
// degree. Throws NotAdmissible (naming the variable) on a bad binding.
RingMatrix evaluate(const GPolynomial& f, const GradedMatrixAlgebra& A,
                    const std::map<GVar, RingMatrix>& assign);

}  // namespace gcpoly
