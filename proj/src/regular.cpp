#include "gcpoly/regular.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "gcpoly/error.hpp"

namespace gcpoly {

std::string RegularGradingSpec::describe() const {
  if (realization == Realization::Grassmann)
    return std::string(graded ? "grassmann" : "grassmann(ungraded)") +
           " budget=" + std::to_string(budget);
  return "pauli m=" + std::to_string(m);
}

RegularGradingSpec grassmann_grading(int budget, bool graded) {
  if (budget < 0 || budget > 62)
    raise(ErrorCode::InvalidInput, "grassmann budget must be in 0..62");
  auto z2 = FiniteGroup::cyclic_product({2}, /*additive_names=*/true);
  Bicharacter beta = graded ? Bicharacter::grassmann_sign(z2)
                            : Bicharacter::trivial(z2);
  RegularGradingSpec spec{z2, std::move(beta),
                          RegularGradingSpec::Realization::Grassmann,
                          budget, graded, 0, 1};
  return spec;
}

RegularGradingSpec pauli_grading(int m, int conductor) {
  if (m < 1) raise(ErrorCode::InvalidInput, "pauli parameter must be >= 1");
  if (conductor < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  if (conductor % m != 0)
    raise(ErrorCode::ConductorMismatch,
          "clock-and-shift grading of M_" + std::to_string(m) +
              " needs the conductor divisible by " + std::to_string(m));
  auto h = FiniteGroup::cyclic_product({m, m});
  Bicharacter beta = Bicharacter::pauli(m, h);
  RegularGradingSpec spec{h, std::move(beta),
                          RegularGradingSpec::Realization::Pauli,
                          0, true, m, conductor};
  return spec;
}

namespace {

RingMatrix pauli_basis_element(int m, int a, int b) {
  // X^a Y^b with X = diag(zeta^k), (Y)_{k+1,k} = 1 cyclically.
  RingMatrix r(m, 0);
  for (int k = 0; k < m; ++k) {
    // Column k: Y^b sends e_k to e_{k+b}; X^a then scales by zeta^{a(k+b)}.
    int row = (k + b) % m;
    r.at(row, k) = GrassmannElement::scalar(
        0, CycloScalar::root_of_unity(m, static_cast<long>(a) * row));
  }
  return r;
}

}  // namespace

std::string realization_element_str(const RealizationElement& x) {
  if (std::holds_alternative<GrassmannElement>(x))
    return std::get<GrassmannElement>(x).str();
  return std::get<RingMatrix>(x).str();
}

std::vector<RealizationElement> realization_component_basis(
    const RegularGradingSpec& spec, int h) {
  if (h < 0 || h >= spec.H->order())
    raise(ErrorCode::InvalidInput, "degree out of range");
  std::vector<RealizationElement> out;
  if (spec.realization == RegularGradingSpec::Realization::Grassmann) {
    int parity = h == spec.H->identity() ? 0 : 1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << spec.budget); ++mask) {
      int p = std::popcount(mask) & 1;
      if (spec.graded ? p == parity : h == spec.H->identity())
        out.emplace_back(GrassmannElement::basis_monomial(spec.budget, mask));
    }
    return out;
  }
  int a = h / spec.m, b = h % spec.m;
  out.emplace_back(pauli_basis_element(spec.m, a, b));
  return out;
}

bool pairing_is_minimal(const Bicharacter& beta) {
  const GroupPtr& H = beta.group();
  for (int h = 0; h < H->order(); ++h) {
    if (h == H->identity()) continue;
    bool separated = false;
    for (int k = 0; k < H->order() && !separated; ++k)
      separated = !beta.value(h, k).is_one();
    if (!separated) return false;
  }
  return true;
}

std::vector<RealizationElement> nonzero_product_witness(
    const RegularGradingSpec& spec, const std::vector<int>& degrees) {
  std::vector<RealizationElement> out;
  if (spec.realization == RegularGradingSpec::Realization::Grassmann) {
    std::vector<int> parities;
    for (int d : degrees) {
      if (d < 0 || d >= spec.H->order())
        raise(ErrorCode::InvalidInput, "degree out of range");
      parities.push_back(spec.graded && d != spec.H->identity() ? 1 : 0);
    }
    auto reps = parity_representatives(spec.budget, parities);
    GrassmannElement prod = GrassmannElement::scalar(spec.budget, CycloScalar(1));
    for (const auto& r : reps) prod *= r;
    if (prod.is_zero())
      raise(ErrorCode::InvalidInput, "disjoint generators multiplied to zero");
    for (auto& r : reps) out.emplace_back(std::move(r));
    return out;
  }
  RingMatrix prod = RingMatrix::identity(spec.m, 0);
  for (int d : degrees) {
    if (d < 0 || d >= spec.H->order())
      raise(ErrorCode::InvalidInput, "degree out of range");
    RingMatrix x = pauli_basis_element(spec.m, d / spec.m, d % spec.m);
    prod = prod * x;
    out.emplace_back(std::move(x));
  }
  if (prod.is_zero())
    raise(ErrorCode::InvalidInput, "invertible factors multiplied to zero");
  return out;
}

bool commutation_law_holds(const RegularGradingSpec& spec, std::string* why) {
  const int nh = spec.H->order();
  auto fail = [&](int h1, int h2) {
    if (why)
      *why = "law fails on components (" + spec.H->name(h1) + ", " +
             spec.H->name(h2) + ")";
    return false;
  };
  if (spec.realization == RegularGradingSpec::Realization::Grassmann) {
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2) {
        const CycloScalar& b = spec.beta.value(h1, h2);
        for (const auto& uv : realization_component_basis(spec, h1))
          for (const auto& vv : realization_component_basis(spec, h2)) {
            const auto& u = std::get<GrassmannElement>(uv);
            const auto& v = std::get<GrassmannElement>(vv);
            GrassmannElement rhs = v * u;
            rhs.scale(b);
            if (u * v != rhs) return fail(h1, h2);
          }
      }
    return true;
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      const CycloScalar& b = spec.beta.value(h1, h2);
      RingMatrix u = pauli_basis_element(spec.m, h1 / spec.m, h1 % spec.m);
      RingMatrix v = pauli_basis_element(spec.m, h2 / spec.m, h2 % spec.m);
      RingMatrix rhs = v * u;
      rhs.scale(b);
      if (!(u * v == rhs)) return fail(h1, h2);
    }
  return true;
}

MonomialPrimenessReport monomial_primeness(const RegularGradingSpec& spec,
                                           const GMonomial& m1,
                                           const GMonomial& m2) {
  std::set<GVar> v1, v2;
  for (const auto& v : m1) v1.insert(v);
  for (const auto& v : m2) v2.insert(v);
  for (const auto& v : v1)
    if (v2.count(v))
      raise(ErrorCode::PreconditionViolated,
            "monomials must use disjoint variables");

  MonomialPrimenessReport rep;
  if (spec.realization == RegularGradingSpec::Realization::Grassmann &&
      spec.graded) {
    // An odd-tagged variable squared kills every admissible value.
    auto vanishes = [&](const GMonomial& m) {
      std::map<GVar, int> mult;
      for (const auto& v : m) ++mult[v];
      for (const auto& [v, k] : mult)
        if (v.degree != spec.H->identity() && k >= 2) return true;
      return false;
    };
    if (vanishes(m1) || vanishes(m2)) {
      rep.holds = true;
      rep.vacuous = true;
      rep.detail = "a factor is an identity of the realization";
      return rep;
    }
  }

  // Bind each variable to a fresh witness and multiply through.
  std::map<GVar, RealizationElement> bind;
  std::vector<GVar> vars(v1.begin(), v1.end());
  vars.insert(vars.end(), v2.begin(), v2.end());
  std::vector<int> degrees;
  for (const auto& v : vars) degrees.push_back(v.degree);
  auto elems = nonzero_product_witness(spec, degrees);
  for (size_t i = 0; i < vars.size(); ++i) bind.emplace(vars[i], elems[i]);

  auto value = [&](const GMonomial& mm, const GMonomial& tail) {
    if (spec.realization == RegularGradingSpec::Realization::Grassmann) {
      GrassmannElement acc = GrassmannElement::scalar(spec.budget, CycloScalar(1));
      for (const auto& v : mm) acc *= std::get<GrassmannElement>(bind.at(v));
      for (const auto& v : tail) acc *= std::get<GrassmannElement>(bind.at(v));
      return RealizationElement(acc);
    }
    RingMatrix acc = RingMatrix::identity(spec.m, 0);
    for (const auto& v : mm) acc = acc * std::get<RingMatrix>(bind.at(v));
    for (const auto& v : tail) acc = acc * std::get<RingMatrix>(bind.at(v));
    return RealizationElement(acc);
  };

  auto is_zero = [](const RealizationElement& x) {
    if (std::holds_alternative<GrassmannElement>(x))
      return std::get<GrassmannElement>(x).is_zero();
    return std::get<RingMatrix>(x).is_zero();
  };

  RealizationElement prod = value(m1, m2);
  rep.holds = !is_zero(prod);
  rep.detail = "witness product " + realization_element_str(prod);
  return rep;
}

CenterReport center_equals_neutral(const RegularGradingSpec& spec) {
  CenterReport rep;
  rep.exact = spec.realization == RegularGradingSpec::Realization::Pauli;
  rep.budget = spec.budget;

  struct Entry {
    RealizationElement v;
    bool neutral;
  };
  std::vector<Entry> basis;
  for (int h = 0; h < spec.H->order(); ++h)
    for (auto& v : realization_component_basis(spec, h))
      basis.push_back(Entry{std::move(v), h == spec.H->identity()});

  auto commutes_with_all = [&](const RealizationElement& u) {
    for (const auto& e : basis) {
      if (std::holds_alternative<GrassmannElement>(u)) {
        const auto& a = std::get<GrassmannElement>(u);
        const auto& b = std::get<GrassmannElement>(e.v);
        if (a * b != b * a) return false;
      } else {
        const auto& a = std::get<RingMatrix>(u);
        const auto& b = std::get<RingMatrix>(e.v);
        if (!(a * b == b * a)) return false;
      }
    }
    return true;
  };

  // Components are spanned by basis monomials whose pairwise products stay
  // on basis monomials, so the centralizer is spanned by the central basis
  // elements and a basis-by-basis comparison decides the question.
  rep.equals_neutral = true;
  for (const auto& e : basis) {
    bool central = commutes_with_all(e.v);
    if (central == e.neutral) continue;
    rep.equals_neutral = false;
    rep.detail = std::string(central ? "central element outside" : "non-central element inside") +
                 " the neutral component: " + realization_element_str(e.v);
    break;
  }
  if (rep.equals_neutral)
    rep.detail = rep.exact ? "centralizer matches the neutral component"
                           : "centralizer matches the neutral component within budget";
  return rep;
}

}  // namespace gcpoly
