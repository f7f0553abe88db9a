#include "gcpoly/freealg.hpp"

#include <algorithm>

#include "gcpoly/error.hpp"

namespace gcpoly {

bool monomial_less(const GMonomial& a, const GMonomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

GPolynomial::GPolynomial(GroupPtr group) : group_(std::move(group)) {
  if (!group_) raise(ErrorCode::InvalidInput, "polynomial needs a group");
}

GPolynomial GPolynomial::variable(const GroupPtr& g, int index, int degree) {
  if (index < 1) raise(ErrorCode::InvalidInput, "variable index must be >= 1");
  if (degree < 0 || degree >= g->order())
    raise(ErrorCode::InvalidInput, "variable tag out of range");
  GPolynomial p(g);
  p.terms_.emplace(GMonomial{GVar{index, degree}}, CycloScalar(1));
  return p;
}

GPolynomial GPolynomial::constant(const GroupPtr& g, const CycloScalar& c) {
  GPolynomial p(g);
  p.insert_({}, c);
  return p;
}

GPolynomial GPolynomial::monomial(const GroupPtr& g, GMonomial m,
                                  const CycloScalar& c) {
  for (const auto& v : m) {
    if (v.index < 1) raise(ErrorCode::InvalidInput, "variable index must be >= 1");
    if (v.degree < 0 || v.degree >= g->order())
      raise(ErrorCode::InvalidInput, "variable tag out of range");
  }
  GPolynomial p(g);
  p.insert_(m, c);
  p.check_tags_();
  return p;
}

void GPolynomial::check_tags_() const {
  std::map<int, int> tag;
  for (const auto& [m, c] : terms_)
    for (const GVar& v : m) {
      auto [it, fresh] = tag.emplace(v.index, v.degree);
      if (!fresh && it->second != v.degree)
        raise(ErrorCode::InvalidInput,
              "x" + std::to_string(v.index) + " appears with two tags (" +
                  group_->name(it->second) + " and " + group_->name(v.degree) +
                  ") in one polynomial");
    }
}

void GPolynomial::insert_(const GMonomial& m, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GPolynomial GPolynomial::operator-() const {
  GPolynomial r(group_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {
void check_same_group(const GPolynomial& a, const GPolynomial& b) {
  if (a.group() != b.group() && !a.group()->same_structure(*b.group()))
    raise(ErrorCode::InvalidInput, "polynomials over different groups");
}
}  // namespace

GPolynomial& GPolynomial::operator+=(const GPolynomial& o) {
  check_same_group(*this, o);
  for (const auto& [m, c] : o.terms_) insert_(m, c);
  check_tags_();
  return *this;
}

GPolynomial& GPolynomial::operator-=(const GPolynomial& o) {
  check_same_group(*this, o);
  for (const auto& [m, c] : o.terms_) insert_(m, -c);
  check_tags_();
  return *this;
}

GPolynomial& GPolynomial::operator*=(const GPolynomial& o) {
  check_same_group(*this, o);
  GPolynomial r(group_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      GMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.insert_(m, ca * cb);
    }
  r.check_tags_();
  *this = std::move(r);
  return *this;
}

GPolynomial& GPolynomial::scale(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool GPolynomial::operator==(const GPolynomial& o) const {
  check_same_group(*this, o);
  return terms_ == o.terms_;
}

int GPolynomial::monomial_group_degree(const GMonomial& m) const {
  int d = group_->identity();
  for (const auto& v : m) d = group_->op(d, v.degree);
  return d;
}

bool GPolynomial::is_homogeneous(int* degree) const {
  if (terms_.empty()) {
    if (degree) *degree = group_->identity();
    return true;
  }
  int d = monomial_group_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_group_degree(m) != d) return false;
  if (degree) *degree = d;
  return true;
}

std::map<GVar, int> GPolynomial::multidegree(const GMonomial& m) {
  std::map<GVar, int> d;
  for (const auto& v : m) ++d[v];
  return d;
}

bool GPolynomial::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  auto d = multidegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (multidegree(m) != d) return false;
  return true;
}

bool GPolynomial::is_multilinear() const {
  if (terms_.empty()) return true;
  auto d = multidegree(terms_.begin()->first);
  for (const auto& [v, k] : d)
    if (k != 1) return false;
  for (const auto& [m, c] : terms_)
    if (multidegree(m) != d) return false;
  return true;
}

std::vector<GVar> GPolynomial::variables() const {
  std::vector<GVar> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& v : m) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

int GPolynomial::max_index() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& v : m) mx = std::max(mx, v.index);
  return mx;
}

GPolynomial GPolynomial::shift_indices(int offset) const {
  GPolynomial r(group_);
  for (const auto& [m, c] : terms_) {
    GMonomial mm = m;
    for (auto& v : mm) {
      v.index += offset;
      if (v.index < 1) raise(ErrorCode::InvalidInput, "index shift below 1");
    }
    r.insert_(mm, c);
  }
  return r;
}

GPolynomial GPolynomial::substitute(const std::map<GVar, GPolynomial>& assign) const {
  for (const auto& [v, p] : assign) {
    check_same_group(*this, p);
    int d;
    if (!p.is_homogeneous(&d) || (!p.is_zero() && d != v.degree))
      raise(ErrorCode::DegreeMismatch,
            "value for x" + std::to_string(v.index) + "[" +
                group_->name(v.degree) + "] is not homogeneous of that degree");
  }
  GPolynomial out(group_);
  for (const auto& [m, c] : terms_) {
    GPolynomial acc = GPolynomial::constant(group_, c);
    for (const auto& v : m) {
      auto it = assign.find(v);
      if (it == assign.end())
        acc *= GPolynomial::variable(group_, v.index, v.degree);
      else
        acc *= it->second;
    }
    out += acc;
  }
  return out;
}

std::vector<GPolynomial> GPolynomial::multihomogeneous_components() const {
  std::map<std::map<GVar, int>, GPolynomial> parts;
  for (const auto& [m, c] : terms_) {
    auto key = multidegree(m);
    auto it = parts.find(key);
    if (it == parts.end()) it = parts.emplace(key, GPolynomial(group_)).first;
    it->second.insert_(m, c);
  }
  std::vector<GPolynomial> out;
  out.reserve(parts.size());
  for (auto& [k, p] : parts) out.push_back(std::move(p));
  return out;
}

GPolynomial GPolynomial::multilinearize() const {
  if (!is_multihomogeneous())
    raise(ErrorCode::PreconditionViolated,
          "multilinearization needs a multihomogeneous input");
  if (terms_.empty()) return GPolynomial(group_);

  auto mdeg = multidegree(terms_.begin()->first);
  // Fresh indices 1..N in blocks following the sorted original generators.
  std::map<GVar, std::vector<int>> fresh;
  int next = 1;
  for (const auto& [v, d] : mdeg) {
    std::vector<int>& ids = fresh[v];
    for (int k = 0; k < d; ++k) ids.push_back(next++);
  }

  GPolynomial out(group_);
  for (const auto& [m, c] : terms_) {
    // Distribute each generator's fresh copies over its occurrences.
    std::map<GVar, std::vector<int>> perm = fresh;
    while (true) {
      GMonomial mm;
      mm.reserve(m.size());
      std::map<GVar, int> used;
      for (const auto& v : m) {
        int o = used[v]++;
        mm.push_back(GVar{perm[v][o], v.degree});
      }
      out.insert_(mm, c);

      // Advance: next_permutation on the last block that still moves.
      auto it = perm.rbegin();
      for (; it != perm.rend(); ++it) {
        if (std::next_permutation(it->second.begin(), it->second.end())) break;
      }
      if (it == perm.rend()) break;
      // Blocks after the advanced one restart from sorted order (they were
      // left at their last permutation, which next_permutation resets).
    }
  }
  return out;
}

std::map<GVar, DerivationPart> derivation_components(const GPolynomial& f) {
  std::map<GVar, DerivationPart> out;
  int base = f.max_index();
  int pos = 0;
  for (const auto& v : f.variables()) {
    ++pos;
    GVar z{base + pos, v.degree};
    GPolynomial h(f.group());
    for (const auto& [m, c] : f.terms()) {
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] != v) continue;
        GMonomial mm = m;
        mm[i] = z;
        h += GPolynomial::monomial(f.group(), mm, c);
      }
    }
    out.emplace(v, DerivationPart{z, std::move(h)});
  }
  return out;
}

std::string GPolynomial::str() const {
  if (terms_.empty()) return "0";

  std::string out;
  bool first = true;
  auto emit = [&](bool neg, const std::string& body) {
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  };

  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < m.size();) {
      size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(m[i].index);
      if (m[i].degree != group_->identity())
        mono += "[" + group_->name(m[i].degree) + "]";
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }

    // One printed term per power-basis piece of the coefficient keeps the
    // output inside the input grammar.
    int cond = c.conductor();
    for (size_t i = 0; i < c.coeffs().size(); ++i) {
      const Rational& q = c.coeffs()[i];
      if (q == 0) continue;
      bool neg = q < 0;
      Rational mag = neg ? Rational(-q) : q;
      std::string body;
      if (i == 0) {
        if (mag != 1 || mono.empty()) body = rational_str(mag);
      } else {
        if (mag != 1) body = rational_str(mag);
        if (!body.empty()) body += "*";
        body += "z" + std::to_string(cond) + "^" + std::to_string(i);
      }
      if (!mono.empty()) {
        if (!body.empty()) body += "*";
        body += mono;
      }
      emit(neg, body);
    }
  }
  return out;
}

CycloScalar crossing_scalar(const GMonomial& m, const std::map<GVar, int>& hdeg,
                            const Bicharacter& beta) {
  auto deg = [&](const GVar& v) {
    auto it = hdeg.find(v);
    if (it == hdeg.end())
      raise(ErrorCode::InvalidInput,
            "no commutation degree assigned to x" + std::to_string(v.index));
    return it->second;
  };
  CycloScalar eps(1);
  for (size_t p = 0; p < m.size(); ++p)
    for (size_t q = p + 1; q < m.size(); ++q)
      if (m[p].index > m[q].index) eps *= beta.value(deg(m[p]), deg(m[q]));
  return eps;
}

GPolynomial apply_crossing_scalars(const GPolynomial& f,
                                   const std::map<GVar, int>& hdeg,
                                   const Bicharacter& beta) {
  GPolynomial out(f.group());
  for (const auto& [m, c] : f.terms()) {
    CycloScalar eps = crossing_scalar(m, hdeg, beta);
    out += GPolynomial::monomial(f.group(), m, c * eps);
  }
  return out;
}

GPolynomial envelope_transform(const GPolynomial& f, const Bicharacter& beta) {
  if (!f.is_multilinear())
    raise(ErrorCode::NonMultilinear, "envelope transform needs a multilinear input");
  if (!f.group()->same_structure(*beta.group()))
    raise(ErrorCode::InvalidInput,
          "polynomial grading group does not match the pairing group");
  std::map<GVar, int> hdeg;
  for (const auto& v : f.variables()) hdeg[v] = v.degree;
  return apply_crossing_scalars(f, hdeg, beta);
}

}  // namespace gcpoly
