#include "gcpoly/matalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "gcpoly/error.hpp"

namespace gcpoly {

namespace {
constexpr int kMaxN = 8;
}

ElementaryGrading::ElementaryGrading(GroupPtr g, std::vector<int> t)
    : group(std::move(g)), tuple(std::move(t)) {
  if (!group) raise(ErrorCode::InvalidInput, "grading needs a group");
  if (tuple.empty()) raise(ErrorCode::InvalidInput, "grading tuple is empty");
  if (static_cast<int>(tuple.size()) > kMaxN)
    raise(ErrorCode::SizeLimit, "matrix size above 8");
  for (int v : tuple)
    if (v < 0 || v >= group->order())
      raise(ErrorCode::InvalidInput, "tuple entry out of range");
}

bool ElementaryGrading::pairwise_distinct() const {
  std::set<int> s(tuple.begin(), tuple.end());
  return s.size() == tuple.size();
}

std::vector<int> ElementaryGrading::support() const {
  std::set<int> s;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) s.insert(degree_of(i, j));
  return std::vector<int>(s.begin(), s.end());
}

const char* algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::MnF: return "MnF";
    case AlgebraKind::MnE: return "MnE";
    case AlgebraKind::Mab: return "Mab";
  }
  return "?";
}

namespace {

void check_component_products(const ElementaryGrading& g) {
  // deg(i,j) * deg(j,k) = deg(i,k) makes the grading multiplicative; this
  // is structural for elementary gradings but cheap to confirm.
  int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.group->op(g.degree_of(i, j), g.degree_of(j, k)) != g.degree_of(i, k))
          raise(ErrorCode::InvalidInput, "grading is not multiplicative");
}

}  // namespace

GradedMatrixAlgebra GradedMatrixAlgebra::mnf(ElementaryGrading g, int conductor) {
  if (conductor < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  check_component_products(g);
  int n = g.n();
  return GradedMatrixAlgebra{AlgebraKind::MnF, n, 0, 0, std::move(g), conductor, 0};
}

GradedMatrixAlgebra GradedMatrixAlgebra::mne(ElementaryGrading g, int conductor,
                                             int budget) {
  if (conductor < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  if (budget < 0 || budget > 62)
    raise(ErrorCode::InvalidInput, "grassmann budget must be in 0..62");
  check_component_products(g);
  int n = g.n();
  return GradedMatrixAlgebra{AlgebraKind::MnE, n, 0, 0, std::move(g), conductor,
                             budget};
}

GradedMatrixAlgebra GradedMatrixAlgebra::mab(int a, int b, int conductor,
                                             int budget) {
  if (a < 0 || b < 0 || a + b < 1)
    raise(ErrorCode::InvalidInput, "block sizes must be nonnegative, a+b >= 1");
  if (a + b > kMaxN) raise(ErrorCode::SizeLimit, "matrix size above 8");
  if (conductor < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  if (budget < 0 || budget > 62)
    raise(ErrorCode::InvalidInput, "grassmann budget must be in 0..62");
  auto z2 = FiniteGroup::cyclic_product({2}, /*additive_names=*/true);
  std::vector<int> tuple(a, 0);
  tuple.insert(tuple.end(), b, 1);
  ElementaryGrading g(std::move(z2), std::move(tuple));
  return GradedMatrixAlgebra{AlgebraKind::Mab, a + b, a, b, std::move(g),
                             conductor, budget};
}

GradedMatrixAlgebra GradedMatrixAlgebra::with_budget(int newbudget) const {
  GradedMatrixAlgebra c = *this;
  if (kind == AlgebraKind::MnF) return c;
  if (newbudget < 0 || newbudget > 62)
    raise(ErrorCode::InvalidInput, "grassmann budget must be in 0..62");
  c.budget = newbudget;
  return c;
}

std::string GradedMatrixAlgebra::describe() const {
  std::string s = algebra_kind_name(kind);
  if (kind == AlgebraKind::Mab) {
    s += " a=" + std::to_string(a) + " b=" + std::to_string(b);
  } else {
    s += " n=" + std::to_string(n) + " tuple=(";
    for (int i = 0; i < n; ++i)
      s += (i ? "," : "") + grading.group->name(grading.tuple[i]);
    s += ")";
  }
  s += " conductor=" + std::to_string(conductor);
  if (grassmann_entries()) s += " budget=" + std::to_string(budget);
  return s;
}

RingMatrix::RingMatrix(int n, int budget)
    : n_(n), budget_(budget), e_(n * n, GrassmannElement(budget)) {
  if (n < 1 || n > kMaxN) raise(ErrorCode::SizeLimit, "matrix size must be 1..8");
}

RingMatrix RingMatrix::identity(int n, int budget) {
  RingMatrix m(n, budget);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = GrassmannElement::scalar(budget, CycloScalar(1));
  return m;
}

RingMatrix RingMatrix::unit(int n, int budget, int i, int j,
                            const GrassmannElement& v) {
  RingMatrix m(n, budget);
  if (i < 0 || i >= n || j < 0 || j >= n)
    raise(ErrorCode::InvalidInput, "matrix unit position out of range");
  m.at(i, j) = v;
  return m;
}

RingMatrix RingMatrix::scalar_unit(int n, int budget, int i, int j,
                                   const CycloScalar& c) {
  return unit(n, budget, i, j, GrassmannElement::scalar(budget, c));
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

namespace {
void check_shape(const RingMatrix& a, const RingMatrix& b) {
  if (a.n() != b.n() || a.budget() != b.budget())
    raise(ErrorCode::InvalidInput, "matrix shape/budget mismatch");
}
}  // namespace

RingMatrix& RingMatrix::operator+=(const RingMatrix& o) {
  check_shape(*this, o);
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RingMatrix& RingMatrix::operator-=(const RingMatrix& o) {
  check_shape(*this, o);
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  check_shape(*this, o);
  RingMatrix r(n_, budget_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const GrassmannElement& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

RingMatrix& RingMatrix::scale(const CycloScalar& c) {
  for (auto& x : e_) x.scale(c);
  return *this;
}

RingMatrix RingMatrix::pow(int k) const {
  if (k < 0) raise(ErrorCode::InvalidInput, "matrix power must be >= 0");
  RingMatrix r = identity(n_, budget_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return n_ == o.n_ && budget_ == o.budget_ && e_ == o.e_;
}

bool RingMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RingMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::string RingMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + at(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::vector<RingMatrix> homogeneous_basis(const GradedMatrixAlgebra& A,
                                          int degree) {
  std::vector<RingMatrix> out;
  uint64_t top = A.grassmann_entries() ? (uint64_t(1) << A.budget) : 1;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      if (A.grading.degree_of(i, j) != degree) continue;
      for (uint64_t mask = 0; mask < top; ++mask) {
        if (A.kind == AlgebraKind::Mab && (std::popcount(mask) & 1) != degree)
          continue;
        out.push_back(RingMatrix::unit(
            A.n, A.budget, i, j, GrassmannElement::basis_monomial(A.budget, mask)));
      }
    }
  return out;
}

bool is_homogeneous_of_degree(const GradedMatrixAlgebra& A, const RingMatrix& M,
                              int degree) {
  if (M.n() != A.n || M.budget() != A.budget) return false;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      const GrassmannElement& x = M.at(i, j);
      if (x.is_zero()) continue;
      if (A.grading.degree_of(i, j) != degree) return false;
      if (A.kind == AlgebraKind::MnF && !x.is_scalar()) return false;
      if (A.kind == AlgebraKind::Mab) {
        int par;
        if (!x.is_homogeneous(&par) || par != degree) return false;
      }
    }
  return true;
}

bool is_central_element(const GradedMatrixAlgebra& A, const RingMatrix& M) {
  for (int d : A.support())
    for (const auto& b : homogeneous_basis(A, d))
      if (!(M * b == b * M)) return false;
  return true;
}

std::vector<Permutation> graded_automorphisms(const ElementaryGrading& g) {
  int n = g.n();
  if (n > kMaxN) raise(ErrorCode::SizeLimit, "matrix size above 8");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = g.degree_of(img[i], img[j]) == g.degree_of(i, j);
    if (ok) out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

CrossedProductInfo is_crossed_product(const ElementaryGrading& g) {
  if (!g.pairwise_distinct())
    raise(ErrorCode::PreconditionViolated,
          "crossed product test needs a pairwise distinct tuple");
  int n = g.n();
  auto H = graded_automorphisms(g);
  CrossedProductInfo info;
  if (static_cast<int>(H.size()) != n) {
    info.crossed = false;
    info.reason = "automorphism group has order " + std::to_string(H.size()) +
                  ", need " + std::to_string(n);
    return info;
  }

  // Normalize the tuple so it starts at the identity; the degrees do not
  // change and the entries then enumerate the support subgroup.
  const GroupPtr& G = g.group;
  int g1inv = G->inv(g.tuple[0]);
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = G->op(g1inv, g.tuple[i]);
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[t[i]] = i;

  std::set<Permutation> hset(H.begin(), H.end());
  for (int i = 0; i < n; ++i) {
    int s = t[i];
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) {
      auto it = pos.find(G->op(s, t[j]));
      if (it == pos.end())
        raise(ErrorCode::InvalidInput,
              "automorphism count is n but the support is not closed");
      img[j] = it->second;
    }
    Permutation sigma(std::move(img));
    if (!hset.count(sigma))
      raise(ErrorCode::InvalidInput,
            "support translation is not a graded automorphism");
    info.correspondence.emplace_back(s, std::move(sigma));
  }
  info.crossed = true;
  info.reason = "support acts regularly on the normalized tuple";
  return info;
}

RingMatrix character_orbit_diagonal(const PermutationGroup& H,
                                    const Character& chi, int rep) {
  if (chi.domain != H.group && !chi.domain->same_structure(*H.group))
    raise(ErrorCode::InvalidInput, "character domain does not match the group");
  if (H.elements.empty())
    raise(ErrorCode::InvalidInput, "empty automorphism group");
  int n = H.elements[0].size();
  if (rep < 0 || rep >= n)
    raise(ErrorCode::InvalidInput, "orbit representative out of range");
  RingMatrix P(n, 0);
  for (int a = 0; a < H.group->order(); ++a) {
    int pos = H.elements[a](rep);
    P.at(pos, pos) += GrassmannElement::scalar(0, chi.value(a));
  }
  return P;
}

GPolynomial witness_polynomial(const ElementaryGrading& g,
                               const std::vector<CycloScalar>& p) {
  int n = g.n();
  if (static_cast<int>(p.size()) != n)
    raise(ErrorCode::PreconditionViolated, "diagonal length must equal n");
  if (!g.pairwise_distinct())
    raise(ErrorCode::PreconditionViolated,
          "witness construction needs a pairwise distinct tuple");
  bool all_zero = true;
  for (const auto& c : p) all_zero = all_zero && c.is_zero();
  if (all_zero) raise(ErrorCode::PreconditionViolated, "diagonal is zero");

  // Every graded automorphism must fix diag(p) up to a scalar, otherwise
  // no graded polynomial can single it out.
  for (const auto& sigma : graded_automorphisms(g)) {
    std::vector<CycloScalar> q(n);
    for (int i = 0; i < n; ++i) q[sigma(i)] = p[i];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (q[i] * p[j] != q[j] * p[i])
          raise(ErrorCode::PreconditionViolated,
                "diagonal is not fixed up to scalar by automorphism " +
                    sigma.str());
  }

  const GroupPtr& G = g.group;
  std::vector<int> vdeg(n);
  for (int j = 0; j < n; ++j)
    vdeg[j] = G->op(G->inv(g.tuple[j]), g.tuple[(j + 1) % n]);

  GPolynomial f(G);
  for (int i = 0; i < n; ++i) {
    GMonomial m;
    m.reserve(n);
    for (int k = 0; k < n; ++k) {
      int j = (i + k) % n;
      m.push_back(GVar{j + 1, vdeg[j]});
    }
    f += GPolynomial::monomial(G, std::move(m), p[i]);
  }
  return f;
}

ElementaryGrading coarsen(const ElementaryGrading& g, const GroupPtr& target,
                          const std::vector<int>& images) {
  const GroupPtr& G = g.group;
  if (static_cast<int>(images.size()) != G->order())
    raise(ErrorCode::NotHomomorphism, "image vector must cover every element");
  for (int v : images)
    if (v < 0 || v >= target->order())
      raise(ErrorCode::NotHomomorphism, "image out of range");
  for (int x = 0; x < G->order(); ++x)
    for (int y = 0; y < G->order(); ++y)
      if (images[G->op(x, y)] != target->op(images[x], images[y]))
        raise(ErrorCode::NotHomomorphism,
              "images violate multiplicativity at (" + G->name(x) + "," +
                  G->name(y) + ")");
  std::vector<int> t(g.tuple.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = images[g.tuple[i]];
  return ElementaryGrading(target, std::move(t));
}

GradedMatrixAlgebra envelope(const GradedMatrixAlgebra& mnf_z2, int budget) {
  if (mnf_z2.kind != AlgebraKind::MnF)
    raise(ErrorCode::InvalidInput, "envelope starts from a scalar algebra");
  const GroupPtr& G = mnf_z2.group();
  if (G->order() != 2)
    raise(ErrorCode::InvalidInput, "envelope needs a group of order 2");
  int e = G->identity();
  int n = mnf_z2.n;
  int a = 0;
  while (a < n && mnf_z2.grading.tuple[a] == e) ++a;
  for (int i = a; i < n; ++i)
    if (mnf_z2.grading.tuple[i] == e)
      raise(ErrorCode::TupleNotSorted,
            "tuple must list the identity block first");
  int b = n - a;

  GradedMatrixAlgebra M = GradedMatrixAlgebra::mab(a, b, mnf_z2.conductor, budget);

  // Component bases must match the tensor description (A (x) E)_h =
  // A_h (x) E_h under e_S E_ij <-> E_ij (x) e_S.
  for (int h = 0; h < 2; ++h) {
    std::set<std::tuple<int, int, uint64_t>> tensor_side;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (mnf_z2.grading.degree_of(i, j) != (h == 0 ? e : 1 - e)) continue;
        for (uint64_t mask = 0; mask < (uint64_t(1) << budget); ++mask)
          if ((std::popcount(mask) & 1) == h) tensor_side.insert({i, j, mask});
      }
    std::set<std::tuple<int, int, uint64_t>> direct_side;
    for (const auto& m : homogeneous_basis(M, h))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (const auto& [mask, c] : m.at(i, j).terms())
            direct_side.insert({i, j, mask});
    if (tensor_side != direct_side)
      raise(ErrorCode::InvalidInput, "envelope component basis mismatch");
  }

  // Multiplication agreement on basis pairs: (E_ij (x) e_S)(E_kl (x) e_T)
  // = delta_jk E_il (x) e_S e_T must equal the matrix product.
  std::vector<RingMatrix> all;
  for (int h = 0; h < 2; ++h) {
    auto part = homogeneous_basis(M, h);
    all.insert(all.end(), part.begin(), part.end());
  }
  auto split = [&](const RingMatrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [mask, c] : m.at(i, j).terms())
          return std::tuple<int, int, uint64_t>{i, j, mask};
    raise(ErrorCode::InvalidInput, "empty basis element");
  };
  for (const auto& u : all)
    for (const auto& v : all) {
      auto [i, j, s] = split(u);
      auto [k, l, t] = split(v);
      RingMatrix expect(n, budget);
      if (j == k) {
        int sign = wedge_sign(s, t);
        if (sign != 0)
          expect.at(i, l) = GrassmannElement::basis_monomial(
              budget, s | t, CycloScalar(sign));
      }
      if (!(u * v == expect))
        raise(ErrorCode::InvalidInput, "envelope product table mismatch");
    }

  return M;
}

RingMatrix evaluate(const GPolynomial& f, const GradedMatrixAlgebra& A,
                    const std::map<GVar, RingMatrix>& assign) {
  auto varname = [&](const GVar& v) {
    std::string s = "x" + std::to_string(v.index);
    if (v.degree != A.group()->identity())
      s += "[" + A.group()->name(v.degree) + "]";
    return s;
  };
  for (const auto& v : f.variables()) {
    auto it = assign.find(v);
    if (it == assign.end())
      raise(ErrorCode::NotAdmissible, "no value bound to " + varname(v));
    if (!is_homogeneous_of_degree(A, it->second, v.degree))
      raise(ErrorCode::NotAdmissible,
            "value for " + varname(v) + " is not homogeneous of its degree");
  }
  RingMatrix acc(A.n, A.budget);
  for (const auto& [m, c] : f.terms()) {
    RingMatrix term = RingMatrix::identity(A.n, A.budget);
    for (const auto& v : m) term = term * assign.at(v);
    term.scale(c);
    acc += term;
  }
  return acc;
}

}  // namespace gcpoly
