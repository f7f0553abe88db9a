#include "gcpoly/checker.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "gcpoly/error.hpp"

namespace gcpoly {

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Identity: return "identity";
    case VerdictStatus::Central: return "central";
    case VerdictStatus::Neither: return "neither";
  }
  return "?";
}

const char* classify_status_name(ClassifyStatus s) {
  switch (s) {
    case ClassifyStatus::Holds: return "holds";
    case ClassifyStatus::Fails: return "fails";
    case ClassifyStatus::Unsupported: return "unsupported";
  }
  return "?";
}

namespace {

// One admissible basis element for a slot: e^par E_{ij} with a generator
// chosen at substitution time.
struct Atom {
  int i, j, par;
};

struct Slot {
  GVar var;
  std::vector<Atom> atoms;
};

std::vector<Slot> build_slots(const GradedMatrixAlgebra& A,
                              const std::vector<GVar>& vars, bool ordinary) {
  std::vector<Slot> slots;
  slots.reserve(vars.size());
  const int n = A.n;
  for (const GVar& v : vars) {
    Slot s{v, {}};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int d = A.grading.degree_of(i, j);
        if (!ordinary && d != v.degree) continue;
        switch (A.kind) {
          case AlgebraKind::MnF:
            s.atoms.push_back({i, j, 0});
            break;
          case AlgebraKind::MnE:
            s.atoms.push_back({i, j, 0});
            s.atoms.push_back({i, j, 1});
            break;
          case AlgebraKind::Mab:
            s.atoms.push_back({i, j, d});
            break;
        }
      }
    slots.push_back(std::move(s));
  }
  return slots;
}

void guard_budget(const GradedMatrixAlgebra& A, const std::vector<Slot>& slots) {
  if (!A.grassmann_entries()) return;
  int odd_capable = 0;
  for (const Slot& s : slots) {
    bool odd = false;
    for (const Atom& a : s.atoms)
      if (a.par) odd = true;
    if (odd) ++odd_capable;
  }
  if (odd_capable > A.budget) {
    std::ostringstream os;
    os << "component needs " << odd_capable
       << " odd generators but the budget is " << A.budget;
    raise(ErrorCode::BudgetExceeded, os.str());
  }
}

struct Mono {
  std::vector<int> seq;  // slot positions, in product order
  CycloScalar c;
};

std::vector<Mono> compile_monomials(const GPolynomial& L,
                                    const std::vector<GVar>& vars) {
  std::map<GVar, int> pos;
  for (size_t s = 0; s < vars.size(); ++s) pos[vars[s]] = (int)s;
  std::vector<Mono> out;
  for (const auto& [m, c] : L.terms()) {
    Mono mo;
    mo.c = c;
    mo.seq.reserve(m.size());
    for (const GVar& v : m) mo.seq.push_back(pos.at(v));
    out.push_back(std::move(mo));
  }
  return out;
}

using Cell = std::pair<int, int>;
using Acc = std::map<std::pair<Cell, std::uint64_t>, CycloScalar>;

void acc_add(Acc& acc, int i, int j, std::uint64_t mask, const CycloScalar& c) {
  auto key = std::make_pair(Cell{i, j}, mask);
  auto it = acc.find(key);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) acc.erase(it);
}

// Value of L at the picked basis tuple, as cell/mask -> coefficient.
// genbit[s] is the generator index for slot s when its pick is odd.
Acc eval_tuple(const std::vector<Mono>& monos, const std::vector<Slot>& slots,
               const std::vector<int>& pick, const std::vector<int>& genbit,
               int n) {
  Acc acc;
  for (const Mono& mo : monos) {
    if (mo.seq.empty()) {
      for (int i = 0; i < n; ++i) acc_add(acc, i, i, 0, mo.c);
      continue;
    }
    int row = -1, col = -1, sign = 1;
    std::uint64_t mask = 0;
    bool dead = false;
    for (int s : mo.seq) {
      const Atom& a = slots[s].atoms[pick[s]];
      if (row < 0) {
        row = a.i;
        col = a.j;
      } else {
        if (col != a.i) {
          dead = true;
          break;
        }
        col = a.j;
      }
      if (a.par) {
        std::uint64_t bit = std::uint64_t{1} << genbit[s];
        if (wedge_sign(mask, bit) < 0) sign = -sign;
        mask |= bit;
      }
    }
    if (dead) continue;
    acc_add(acc, row, col, mask, sign < 0 ? -mo.c : mo.c);
  }
  return acc;
}

RingMatrix acc_to_matrix(const Acc& acc, int n, int budget) {
  RingMatrix r(n, budget);
  for (const auto& [key, c] : acc) {
    auto [cell, mask] = key;
    r.at(cell.first, cell.second) =
        r.at(cell.first, cell.second) +
        GrassmannElement::basis_monomial(budget, mask, c);
  }
  return r;
}

struct TupleWitness {
  std::vector<int> pick;
  std::vector<int> genbit;
  RingMatrix value;

  TupleWitness() : value(1, 0) {}
};

// Walks every admissible basis tuple of the multilinear polynomial L.
// Returns the first tuple with a nonzero value, or nullopt when L
// vanishes on all of them. Slots are ordered by the sorted variables.
std::optional<TupleWitness> find_nonvanishing_tuple(
    const GPolynomial& L, const GradedMatrixAlgebra& A,
    const std::vector<Slot>& slots) {
  for (const Slot& s : slots)
    if (s.atoms.empty()) return std::nullopt;  // that component is zero
  guard_budget(A, slots);
  std::vector<GVar> vars;
  vars.reserve(slots.size());
  for (const Slot& s : slots) vars.push_back(s.var);
  std::vector<Mono> monos = compile_monomials(L, vars);
  const size_t k = slots.size();
  std::vector<int> pick(k, 0), genbit(k, -1);
  for (;;) {
    int gens = 0;
    for (size_t s = 0; s < k; ++s)
      genbit[s] = slots[s].atoms[pick[s]].par ? gens++ : -1;
    Acc acc = eval_tuple(monos, slots, pick, genbit, A.n);
    if (!acc.empty()) {
      TupleWitness w;
      w.pick = pick;
      w.genbit = genbit;
      w.value = acc_to_matrix(acc, A.n, A.budget);
      return w;
    }
    size_t s = k;
    while (s > 0) {
      --s;
      if (++pick[s] < (int)slots[s].atoms.size()) break;
      pick[s] = 0;
      if (s == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;  // single empty tuple already tested
  }
}

RingMatrix atom_matrix(const GradedMatrixAlgebra& A, const Atom& a, int genbit) {
  GrassmannElement e =
      a.par ? GrassmannElement::basis_monomial(A.budget, std::uint64_t{1} << genbit)
            : GrassmannElement::scalar(A.budget, CycloScalar(1));
  return RingMatrix::unit(A.n, A.budget, a.i, a.j, e);
}

void check_compatible(const GPolynomial& f, const GradedMatrixAlgebra& A) {
  if (!f.group()->same_structure(*A.grading.group))
    raise(ErrorCode::InvalidInput,
          "polynomial and algebra use different grading groups");
}

void check_ordinary_tags(const GPolynomial& f) {
  for (const GVar& v : f.variables())
    if (v.degree != f.group()->identity())
      raise(ErrorCode::InvalidInput,
            "the ungraded check expects untagged variables");
}

// Retag f's variables onto the algebra's group so trivially graded input
// can be checked against any algebra in ordinary mode.
GPolynomial adapt_trivial_group(const GPolynomial& f,
                                const GradedMatrixAlgebra& A) {
  GPolynomial out{A.grading.group};
  const int e = A.grading.group->identity();
  for (const auto& [m, c] : f.terms()) {
    GMonomial mm;
    for (const GVar& v : m) mm.push_back(GVar{v.index, e});
    out += GPolynomial::monomial(A.grading.group, mm, c);
  }
  return out;
}

// Same fold as evaluate() without the per-variable tag check: ordinary
// evidence mixes degrees within one value.
RingMatrix evaluate_untagged(const GPolynomial& f, const GradedMatrixAlgebra& A,
                             const std::map<GVar, RingMatrix>& assign) {
  RingMatrix acc(A.n, A.budget);
  for (const auto& [m, c] : f.terms()) {
    RingMatrix term = RingMatrix::identity(A.n, A.budget);
    for (const auto& v : m) term = term * assign.at(v);
    term.scale(c);
    acc += term;
  }
  return acc;
}

bool identity_impl(const GPolynomial& f, const GradedMatrixAlgebra& A,
                   bool ordinary) {
  for (const GPolynomial& comp : f.multihomogeneous_components()) {
    GPolynomial L = comp.multilinearize();
    std::vector<Slot> slots = build_slots(A, L.variables(), ordinary);
    if (find_nonvanishing_tuple(L, A, slots)) return false;
  }
  return true;
}

// Rebuild a nonzero value of the full polynomial from the multilinear
// witness of one component: give each copy of a repeated variable the
// basis element from its block, variables outside the component get zero,
// then search small scalings until the value is nonzero. The multilinear
// witness is the coefficient of the all-distinct scaling pattern, so a
// nonzero scaling always exists.
std::map<GVar, RingMatrix> recover_evidence(const GPolynomial& full,
                                            const GPolynomial& component,
                                            const GradedMatrixAlgebra& A,
                                            const std::vector<Slot>& slots,
                                            const TupleWitness& w, unsigned seed,
                                            RingMatrix* value_out) {
  std::vector<GVar> vars = component.variables();
  std::map<GVar, int> mult = GPolynomial::multidegree(
      component.terms().begin()->first);
  std::vector<std::vector<RingMatrix>> blocks;
  size_t slot_at = 0;
  for (const GVar& v : vars) {
    std::vector<RingMatrix> b;
    for (int c = 0; c < mult.at(v); ++c, ++slot_at)
      b.push_back(atom_matrix(A, slots[slot_at].atoms[w.pick[slot_at]],
                              w.genbit[slot_at]));
    blocks.push_back(std::move(b));
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(1, 9);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::map<GVar, RingMatrix> assign;
    for (size_t x = 0; x < vars.size(); ++x) {
      RingMatrix v(A.n, A.budget);
      for (size_t c = 0; c < blocks[x].size(); ++c) {
        long t = 1;
        if (attempt == 1)
          t = (long)c + 1;
        else if (attempt == 2)
          t = 1L << std::min<size_t>(c, 20);
        else if (attempt >= 3)
          t = dist(rng);
        RingMatrix part = blocks[x][c];
        part.scale(CycloScalar(t));
        v += part;
      }
      assign.emplace(vars[x], std::move(v));
    }
    for (const GVar& v : full.variables())
      if (!assign.count(v)) assign.emplace(v, RingMatrix(A.n, A.budget));
    RingMatrix val = evaluate_untagged(full, A, assign);
    if (!val.is_zero()) {
      if (value_out) *value_out = val;
      return assign;
    }
  }
  raise(ErrorCode::InvalidInput,
        "internal: could not rebuild a nonzero substitution from the witness");
}

struct ComponentWitness {
  GPolynomial component;
  std::vector<Slot> slots;
  TupleWitness w;

  ComponentWitness(GPolynomial c) : component(std::move(c)) {}
};

std::optional<ComponentWitness> first_witness(const GPolynomial& f,
                                              const GradedMatrixAlgebra& A,
                                              bool ordinary) {
  for (const GPolynomial& comp : f.multihomogeneous_components()) {
    GPolynomial L = comp.multilinearize();
    std::vector<Slot> slots = build_slots(A, L.variables(), ordinary);
    auto w = find_nonvanishing_tuple(L, A, slots);
    if (w) {
      ComponentWitness cw(comp);
      cw.slots = std::move(slots);
      cw.w = std::move(*w);
      return cw;
    }
  }
  return std::nullopt;
}

std::vector<int> central_test_degrees(const GradedMatrixAlgebra& A,
                                      bool ordinary) {
  if (ordinary) return {A.grading.group->identity()};
  return A.grading.support();
}

VerdictStatus status_impl(const GPolynomial& f, const GradedMatrixAlgebra& A,
                          bool ordinary) {
  if (identity_impl(f, A, ordinary)) return VerdictStatus::Identity;
  GVar y{f.max_index() + 1, f.group()->identity()};
  for (int g : central_test_degrees(A, ordinary)) {
    y.degree = g;
    GPolynomial yg = GPolynomial::variable(f.group(), y.index, y.degree);
    GPolynomial c = f * yg - yg * f;
    if (!identity_impl(c, A, ordinary)) return VerdictStatus::Neither;
  }
  return VerdictStatus::Central;
}

Verdict decide(const GPolynomial& f, const GradedMatrixAlgebra& A,
               const CheckOptions& opt) {
  Verdict v;
  if (identity_impl(f, A, opt.ordinary)) {
    v.status = VerdictStatus::Identity;
    return v;
  }
  GVar y{f.max_index() + 1, f.group()->identity()};
  for (int g : central_test_degrees(A, opt.ordinary)) {
    y.degree = g;
    GPolynomial yg = GPolynomial::variable(f.group(), y.index, y.degree);
    GPolynomial c = f * yg - yg * f;
    auto cw = first_witness(c, A, opt.ordinary);
    if (!cw) continue;
    v.status = VerdictStatus::Neither;
    if (!opt.want_evidence) return v;
    RingMatrix cval(A.n, A.budget);
    std::map<GVar, RingMatrix> assign = recover_evidence(
        c, cw->component, A, cw->slots, cw->w, opt.seed, &cval);
    auto yit = assign.find(y);
    if (yit == assign.end())
      raise(ErrorCode::InvalidInput,
            "internal: commutator witness lost its partner variable");
    RingMatrix b = yit->second;
    assign.erase(yit);
    v.partner = std::make_pair(y, b);
    v.evidence = assign;
    v.value = evaluate_untagged(f, A, v.evidence);
    return v;
  }
  v.status = VerdictStatus::Central;
  if (!opt.want_evidence) return v;
  auto fw = first_witness(f, A, opt.ordinary);
  if (!fw)
    raise(ErrorCode::InvalidInput, "internal: non-identity without a witness");
  RingMatrix val(A.n, A.budget);
  v.evidence =
      recover_evidence(f, fw->component, A, fw->slots, fw->w, opt.seed, &val);
  v.value = val;
  return v;
}

GPolynomial prepare(const GPolynomial& f, const GradedMatrixAlgebra& A,
                    const CheckOptions& opt) {
  if (opt.ordinary) {
    check_ordinary_tags(f);
    if (f.group()->order() == 1 && A.grading.group->order() != 1)
      return adapt_trivial_group(f, A);
  }
  check_compatible(f, A);
  return f;
}

}  // namespace

bool is_graded_identity(const GPolynomial& f, const GradedMatrixAlgebra& A,
                        const CheckOptions& opt) {
  GPolynomial g = prepare(f, A, opt);
  return identity_impl(g, A, opt.ordinary);
}

Verdict check_graded_central(const GPolynomial& f, const GradedMatrixAlgebra& A,
                             const CheckOptions& opt) {
  GPolynomial g = prepare(f, A, opt);
  Verdict v = decide(g, A, opt);
  if (A.grassmann_entries() && opt.stability_probe) {
    int larger = std::min(A.budget + 2, 62);
    BudgetNote note{A.budget, larger, true};
    if (larger > A.budget) {
      VerdictStatus again = status_impl(g, A.with_budget(larger), opt.ordinary);
      note.stable = (again == v.status);
    }
    v.budget = note;
  }
  return v;
}

OrdinaryReport check_central_ordinary(const GPolynomial& f,
                                      const GradedMatrixAlgebra& A,
                                      const CheckOptions& opt) {
  CheckOptions o = opt;
  o.ordinary = true;
  OrdinaryReport rep;
  rep.verdict = check_graded_central(f, A, o);
  if (A.kind == AlgebraKind::Mab &&
      rep.verdict.status != VerdictStatus::Identity) {
    GPolynomial g = prepare(f, A, o);
    for (int parity : {0, 1}) {
      if (values_in_component(g, A, parity, true)) {
        rep.component = parity;
        break;
      }
    }
  }
  return rep;
}

namespace {

// Visits the value of every admissible basis tuple of every multilinear
// piece; stops early when the callback returns false.
bool for_each_basis_value(const GPolynomial& f, const GradedMatrixAlgebra& A,
                          bool ordinary,
                          const std::function<bool(const Acc&, int)>& cb) {
  for (const GPolynomial& comp : f.multihomogeneous_components()) {
    GPolynomial L = comp.multilinearize();
    std::vector<Slot> slots = build_slots(A, L.variables(), ordinary);
    bool empty = false;
    for (const Slot& s : slots)
      if (s.atoms.empty()) empty = true;
    if (empty) continue;
    guard_budget(A, slots);
    std::vector<GVar> vars;
    for (const Slot& s : slots) vars.push_back(s.var);
    std::vector<Mono> monos = compile_monomials(L, vars);
    const size_t k = slots.size();
    std::vector<int> pick(k, 0), genbit(k, -1);
    bool more = true;
    while (more) {
      int gens = 0;
      for (size_t s = 0; s < k; ++s)
        genbit[s] = slots[s].atoms[pick[s]].par ? gens++ : -1;
      Acc acc = eval_tuple(monos, slots, pick, genbit, A.n);
      if (!cb(acc, gens)) return false;
      more = false;
      size_t s = k;
      while (s > 0) {
        --s;
        if (++pick[s] < (int)slots[s].atoms.size()) {
          more = true;
          break;
        }
        pick[s] = 0;
      }
    }
  }
  return true;
}

bool proportional(const Acc& v, const RingMatrix& P, int n) {
  // v and P are colinear iff all 2x2 cross determinants vanish; the mask
  // part of v must be trivial since P is a scalar matrix.
  for (const auto& [key, c] : v)
    if (key.second != 0) return false;
  auto entry = [&](int i, int j) {
    auto it = v.find(std::make_pair(Cell{i, j}, std::uint64_t{0}));
    return it == v.end() ? CycloScalar(0) : it->second;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          CycloScalar lhs = entry(i, j) * P.at(k, l).scalar_part();
          CycloScalar rhs = entry(k, l) * P.at(i, j).scalar_part();
          if (!(lhs == rhs)) return false;
        }
  return true;
}

}  // namespace

std::optional<RingMatrix> scalar_line_certificate(const GPolynomial& f,
                                                  const GradedMatrixAlgebra& A) {
  if (A.kind != AlgebraKind::MnF)
    raise(ErrorCode::InvalidInput,
          "scalar line certificates need a scalar matrix algebra");
  check_compatible(f, A);
  const int n = A.n;
  std::optional<RingMatrix> line;
  bool ok = for_each_basis_value(
      f, A, false, [&](const Acc& v, int) {
        if (v.empty()) return true;
        if (!line) {
          line = acc_to_matrix(v, n, A.budget);
          return true;
        }
        return proportional(v, *line, n);
      });
  if (!ok || !line) return std::nullopt;
  // Normalize so that some diagonal entry is 1.
  for (int i = 0; i < n; ++i) {
    CycloScalar d = line->at(i, i).scalar_part();
    if (!d.is_zero()) {
      RingMatrix P = *line;
      P.scale(d.inverse());
      return P;
    }
  }
  return line;
}

bool values_on_line(const GPolynomial& f, const GradedMatrixAlgebra& A,
                    const RingMatrix& P) {
  check_compatible(f, A);
  return for_each_basis_value(f, A, false, [&](const Acc& v, int) {
    return proportional(v, P, A.n);
  });
}

bool values_in_component(const GPolynomial& f, const GradedMatrixAlgebra& A,
                         int parity, bool ordinary) {
  if (A.kind != AlgebraKind::Mab)
    raise(ErrorCode::InvalidInput,
          "component membership is a question about block-graded algebras");
  return for_each_basis_value(f, A, ordinary, [&](const Acc& v, int) {
    for (const auto& [key, c] : v) {
      auto [cell, mask] = key;
      (void)mask;  // admissible entries have mask parity equal to the block parity
      int p = A.grading.degree_of(cell.first, cell.second) % 2;
      if (p != parity % 2) return false;
    }
    return true;
  });
}

namespace {

RingMatrix orbit_indicator(const PermutationGroup& H, int rep, int n) {
  RingMatrix P(n, 0);
  std::set<int> seen;
  for (const Permutation& a : H.elements) seen.insert(a(rep));
  for (int j : seen) P.at(j, j) = GrassmannElement::scalar(0, CycloScalar(1));
  return P;
}

std::vector<CycloScalar> diagonal_of(const RingMatrix& P, int n) {
  std::vector<CycloScalar> p;
  for (int i = 0; i < n; ++i) p.push_back(P.at(i, i).scalar_part());
  return p;
}

void verify_certificate(const GradedMatrixAlgebra& A,
                        const WitnessCertificate& cert) {
  CheckOptions opt;
  opt.want_evidence = false;
  opt.stability_probe = false;
  Verdict vf = check_graded_central(cert.f, A, opt);
  if (vf.status != VerdictStatus::Neither)
    raise(ErrorCode::InvalidInput,
          "internal: certificate polynomial is not a proper non-central witness");
  GPolynomial prod = cert.f;
  int span = cert.f.max_index();
  for (int c = 1; c < cert.k; ++c) prod = prod * cert.f.shift_indices(span * c);
  Verdict vp = check_graded_central(prod, A, opt);
  if (vp.status != VerdictStatus::Central)
    raise(ErrorCode::InvalidInput,
          "internal: certificate product of disjoint copies is not central");
  RingMatrix pk = cert.P.pow(cert.k);
  if (!(pk == RingMatrix::identity(A.n, 0)))
    raise(ErrorCode::InvalidInput, "internal: certificate matrix order is wrong");
  if (!values_on_line(cert.f, A, cert.P))
    raise(ErrorCode::InvalidInput,
          "internal: certificate values leave the expected line");
}

}  // namespace

ClassifyResult classify_primeness(const GradedMatrixAlgebra& A, int torsion_r) {
  if (A.kind != AlgebraKind::MnF)
    raise(ErrorCode::InvalidInput,
          "the classifier covers scalar matrix algebras");
  ClassifyResult res;
  if (!A.grading.pairwise_distinct()) {
    res.status = ClassifyStatus::Unsupported;
    res.detail =
        "the defining tuple has repeated entries; the classification here "
        "covers pairwise distinct tuples only";
    return res;
  }
  const int n = A.n;
  std::vector<Permutation> auts = graded_automorphisms(A.grading);
  PermutationGroup H = permutation_group(auts);
  res.aut_order = (int)auts.size();
  res.orbits = orbit_partition(auts, n);
  res.crossed = ((int)auts.size() == n);
  for (const auto& orb : res.orbits)
    if ((int)orb.size() != res.aut_order)
      raise(ErrorCode::InvalidInput,
            "internal: symmetry orbits of a distinct tuple must share one size");

  std::ostringstream detail;
  if (!res.crossed) {
    const int d = (int)res.orbits.size();
    RingMatrix P(n, 0);
    for (int s = 0; s < d; ++s) {
      RingMatrix ind = orbit_indicator(H, res.orbits[s][0], n);
      P = (s + 1 < d) ? P + ind : P - ind;
    }
    WitnessCertificate cert{
        witness_polynomial(A.grading, diagonal_of(P, n)), P, 2,
        Character{H.group, torsion_r,
                  std::vector<long>((size_t)H.group->order(), 0)},
        "orbit indicator combination; the symmetry group is smaller than the "
        "matrix size"};
    verify_certificate(A, cert);
    res.status = ClassifyStatus::Fails;
    res.certificate = std::move(cert);
    detail << "symmetry group has order " << res.aut_order << " < " << n
           << ", giving " << d << " diagonal orbits";
    res.detail = detail.str();
    return res;
  }

  std::vector<Character> chars = homs_to_roots(H.group, torsion_r);
  const Character* nontrivial = nullptr;
  for (const Character& ch : chars)
    if (!ch.is_trivial()) {
      nontrivial = &ch;
      break;
    }
  if (!nontrivial) {
    res.status = ClassifyStatus::Holds;
    detail << "the symmetry group acts transitively (order " << n
           << ") and admits no nontrivial character into the order-"
           << torsion_r << " roots";
    res.detail = detail.str();
    return res;
  }
  RingMatrix P = character_orbit_diagonal(H, *nontrivial, 0);
  WitnessCertificate cert{witness_polynomial(A.grading, diagonal_of(P, n)), P,
                          n, *nontrivial,
                          "character-weighted diagonal over the transitive "
                          "symmetry orbit"};
  verify_certificate(A, cert);
  res.status = ClassifyStatus::Fails;
  res.certificate = std::move(cert);
  detail << "transitive symmetry group with a nontrivial character "
         << nontrivial->str() << " into the order-" << torsion_r << " roots";
  res.detail = detail.str();
  return res;
}

TransferReport transfer_check(const GPolynomial& f, int a, int b, int budget,
                              int conductor) {
  if (f.group()->order() != 2)
    raise(ErrorCode::InvalidInput,
          "the transfer test works over a group of order two");
  if (a < 0 || b < 0 || a + b < 1 || a + b > 8)
    raise(ErrorCode::InvalidInput, "block sizes out of range");
  std::vector<int> tuple(a, 0);
  tuple.insert(tuple.end(), (size_t)b, 1);
  GradedMatrixAlgebra Af =
      GradedMatrixAlgebra::mnf(ElementaryGrading(f.group(), tuple), conductor);
  Bicharacter beta = Bicharacter::grassmann_sign(f.group());
  TransferReport rep(envelope_transform(f, beta));
  GradedMatrixAlgebra Ae = GradedMatrixAlgebra::mab(a, b, conductor, budget);
  GPolynomial star = rep.transformed;
  if (!Ae.grading.group->same_structure(*f.group()))
    raise(ErrorCode::InvalidInput, "internal: block grading group mismatch");
  rep.identity_mnf = is_graded_identity(f, Af);
  // The block algebra is built over its own order-two group object.
  GPolynomial star_adapted{Ae.grading.group};
  for (const auto& [m, c] : star.terms())
    star_adapted =
        star_adapted + GPolynomial::monomial(Ae.grading.group, m, c);
  rep.identity_mab = is_graded_identity(star_adapted, Ae);
  rep.agree = (rep.identity_mnf == rep.identity_mab);
  return rep;
}

namespace {

void partitions_upto(int maxdeg, std::vector<std::vector<int>>& out) {
  for (int total = 1; total <= maxdeg; ++total) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int next = std::min(left, cap); next >= 1; --next) {
        cur.push_back(next);
        rec(left - next, next);
        cur.pop_back();
      }
    };
    rec(total, total);
  }
}

GPolynomial rename_form(const GPolynomial& f, const std::vector<int>& perm,
                        const std::vector<GVar>& vars) {
  std::map<GVar, GPolynomial> sub;
  for (size_t s = 0; s < vars.size(); ++s)
    sub.emplace(vars[s], GPolynomial::variable(f.group(), perm[s] + 1,
                                               vars[s].degree));
  return f.substitute(sub);
}

std::vector<GPolynomial> scan_forms(const GradedMatrixAlgebra& A, int maxdeg,
                                    const std::vector<CycloScalar>& coeffset) {
  std::vector<std::vector<int>> shapes;
  partitions_upto(maxdeg, shapes);
  std::vector<int> support = A.grading.support();
  std::vector<GPolynomial> forms;
  for (const auto& shape : shapes) {
    const int k = (int)shape.size();
    std::vector<int> degs(k, 0);
    for (;;) {
      // letters of the product word: variable s appears shape[s] times
      std::vector<int> base;
      for (int s = 0; s < k; ++s)
        base.insert(base.end(), (size_t)shape[s], s);
      std::vector<std::vector<int>> arrangements;
      std::vector<int> word = base;
      do
        arrangements.push_back(word);
      while (std::next_permutation(word.begin(), word.end()));
      std::vector<GVar> vars;
      for (int s = 0; s < k; ++s)
        vars.push_back(GVar{s + 1, support[degs[s]]});
      std::vector<size_t> cpick(arrangements.size(), 0);
      for (;;) {
        GPolynomial f{A.grading.group};
        for (size_t r = 0; r < arrangements.size(); ++r) {
          GMonomial m;
          for (int s : arrangements[r]) m.push_back(vars[s]);
          f = f + GPolynomial::monomial(A.grading.group, m, coeffset[cpick[r]]);
        }
        // keep only the lexicographically least relabeling of each form
        std::string key = f.str();
        bool keep = true;
        std::vector<int> perm(k);
        for (int s = 0; s < k; ++s) perm[s] = s;
        while (std::next_permutation(perm.begin(), perm.end())) {
          bool same_shape = true;
          for (int s = 0; s < k; ++s)
            if (shape[perm[s]] != shape[s]) same_shape = false;
          if (!same_shape) continue;
          if (rename_form(f, perm, vars).str() < key) {
            keep = false;
            break;
          }
        }
        if (keep) forms.push_back(std::move(f));
        size_t r = cpick.size();
        bool more = false;
        while (r > 0) {
          --r;
          if (++cpick[r] < coeffset.size()) {
            more = true;
            break;
          }
          cpick[r] = 0;
        }
        if (!more) break;
      }
      int s = k;
      bool more = false;
      while (s > 0) {
        --s;
        if (++degs[s] < (int)support.size()) {
          more = true;
          break;
        }
        degs[s] = 0;
      }
      if (!more) break;
    }
  }
  return forms;
}

}  // namespace

ScanReport primeness_scan(const GradedMatrixAlgebra& A, int maxdeg,
                          const std::vector<CycloScalar>& coeffset,
                          const CheckOptions& opt) {
  if (maxdeg < 1 || maxdeg > 3)
    raise(ErrorCode::PreconditionViolated,
          "the scan covers total degree 1 through 3");
  if (coeffset.empty())
    raise(ErrorCode::InvalidInput, "empty coefficient set");
  for (const CycloScalar& c : coeffset)
    if (c.is_zero())
      raise(ErrorCode::InvalidInput,
            "zero coefficients would duplicate lower-degree forms");
  CheckOptions fast = opt;
  fast.want_evidence = false;
  fast.stability_probe = false;
  std::vector<GPolynomial> forms = scan_forms(A, maxdeg, coeffset);
  std::vector<VerdictStatus> status;
  status.reserve(forms.size());
  for (const GPolynomial& f : forms)
    status.push_back(check_graded_central(f, A, fast).status);
  ScanReport rep;
  for (size_t i = 0; i < forms.size(); ++i) {
    int span = forms[i].max_index();
    for (size_t j = 0; j < forms.size(); ++j) {
      ++rep.pairs;
      GPolynomial g = forms[j].shift_indices(span);
      GPolynomial prod = forms[i] * g;
      Verdict vp = check_graded_central(prod, A, fast);
      if (vp.status != VerdictStatus::Central) continue;
      ++rep.central_products;
      ScanPair pair{forms[i], forms[j], status[i], status[j]};
      if (rep.central_pairs.size() < 10) rep.central_pairs.push_back(pair);
      if (status[i] != VerdictStatus::Central ||
          status[j] != VerdictStatus::Central) {
        ++rep.counterexample_count;
        if (rep.counterexamples.size() < 10)
          rep.counterexamples.push_back(pair);
      }
    }
  }
  return rep;
}

}  // namespace gcpoly
