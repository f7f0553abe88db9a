#include "gcpoly/grassmann.hpp"

#include <algorithm>
#include <bit>

namespace gcpoly {

namespace {
constexpr int kMaxBudget = 62;
}

GrassmannElement::GrassmannElement(int budget) : budget_(budget) {
  if (budget < 0 || budget > kMaxBudget)
    raise(ErrorCode::InvalidInput, "grassmann budget must be in 0..62");
}

GrassmannElement GrassmannElement::scalar(int budget, const CycloScalar& c) {
  GrassmannElement g(budget);
  g.insert_(0, c);
  return g;
}

GrassmannElement GrassmannElement::basis_monomial(int budget, uint64_t mask,
                                                  const CycloScalar& c) {
  GrassmannElement g(budget);
  if (budget < 64 && (mask >> budget) != 0)
    raise(ErrorCode::InvalidInput, "monomial uses generators beyond the budget");
  g.insert_(mask, c);
  return g;
}

GrassmannElement GrassmannElement::generator(int budget, int i) {
  if (i < 1 || i > budget)
    raise(ErrorCode::InvalidInput, "generator index out of budget");
  return basis_monomial(budget, uint64_t(1) << (i - 1));
}

bool GrassmannElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

CycloScalar GrassmannElement::scalar_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? CycloScalar(0) : it->second;
}

void GrassmannElement::insert_(uint64_t mask, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(budget_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  if (budget_ != o.budget_)
    raise(ErrorCode::InvalidInput, "grassmann budget mismatch");
  for (const auto& [m, c] : o.terms_) insert_(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  if (budget_ != o.budget_)
    raise(ErrorCode::InvalidInput, "grassmann budget mismatch");
  for (const auto& [m, c] : o.terms_) insert_(m, -c);
  return *this;
}

int wedge_sign(uint64_t a, uint64_t b) {
  if (a & b) return 0;
  // Count pairs (x in a, y in b) with x > y.
  int inv = 0;
  uint64_t bb = b;
  while (bb) {
    int y = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a >> (y + 1)) & 1;
  }
  return (inv & 1) ? -1 : 1;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& o) {
  if (budget_ != o.budget_)
    raise(ErrorCode::InvalidInput, "grassmann budget mismatch");
  GrassmannElement r(budget_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      CycloScalar c = ca * cb;
      if (s < 0) c = -c;
      r.insert_(ma | mb, c);
    }
  *this = std::move(r);
  return *this;
}

GrassmannElement& GrassmannElement::scale(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool GrassmannElement::is_homogeneous(int* parity) const {
  if (terms_.empty()) {
    if (parity) *parity = 0;
    return true;
  }
  int p = std::popcount(terms_.begin()->first) & 1;
  for (const auto& [m, c] : terms_)
    if ((std::popcount(m) & 1) != p) return false;
  if (parity) *parity = p;
  return true;
}

GrassmannElement GrassmannElement::parity_component(int parity) const {
  GrassmannElement r(budget_);
  for (const auto& [m, c] : terms_)
    if ((std::popcount(m) & 1) == (parity & 1)) r.terms_.emplace(m, c);
  return r;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<uint64_t, CycloScalar>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int pa = std::popcount(a.first), pb = std::popcount(b.first);
    return pa != pb ? pa < pb : a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    std::string mono;
    uint64_t mm = m;
    while (mm) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      mono += "e" + std::to_string(i + 1);
    }
    std::string piece;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      neg = q < 0;
      Rational mag = neg ? Rational(-q) : q;
      if (mono.empty()) {
        piece = rational_str(mag);
      } else {
        piece = (mag == 1 ? "" : rational_str(mag) + "*") + mono;
      }
    } else {
      piece = "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (first) {
      out = (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

std::vector<GrassmannElement> parity_representatives(
    int budget, const std::vector<int>& parities) {
  int odd = 0;
  for (int p : parities) odd += (p & 1);
  if (odd > budget)
    raise(ErrorCode::BudgetExceeded,
          "parity pattern needs " + std::to_string(odd) +
              " generators, budget is " + std::to_string(budget));
  std::vector<GrassmannElement> out;
  int next = 1;
  for (int p : parities) {
    if (p & 1)
      out.push_back(GrassmannElement::generator(budget, next++));
    else
      out.push_back(GrassmannElement::scalar(budget, CycloScalar(1)));
  }
  return out;
}

}  // namespace gcpoly
