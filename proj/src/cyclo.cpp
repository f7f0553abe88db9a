#include "gcpoly/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>

namespace gcpoly {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b. b need not be monic.
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);  // the leading term cancels, so the degree strictly drops
  }
  trim(q);
  r = std::move(a);
}

QPoly poly_rem(QPoly a, const QPoly& mod) {
  QPoly q, r;
  trim(a);
  if (a.size() < mod.size()) return a;
  poly_divmod(std::move(a), mod, q, r);
  return r;
}

QPoly poly_quot_exact(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  poly_divmod(a, b, q, r);
  if (!r.empty()) raise(ErrorCode::InvalidInput, "inexact polynomial division");
  return q;
}

// Solve sum_j x_j*cols[j] = b over Q. Columns are padded to `rows` entries.
std::optional<QPoly> solve_columns(const std::vector<QPoly>& cols,
                                   const QPoly& b, size_t rows) {
  size_t ncols = cols.size();
  std::vector<QPoly> m(rows, QPoly(ncols + 1, Rational(0)));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < cols[j].size() && i < rows; ++i) m[i][j] = cols[j][i];
  for (size_t i = 0; i < b.size() && i < rows; ++i) m[i][ncols] = b[i];

  std::vector<int> pivot_col(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (size_t j = col; j <= ncols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (m[i][ncols] != 0) return std::nullopt;

  QPoly x(ncols, Rational(0));
  for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = m[i][ncols];
  return x;
}

// zeta_m^j rewritten in the power basis of zeta_L, for m | L.
QPoly lift_power(int m, int L, size_t j) {
  size_t deg = j * static_cast<size_t>(L / m);
  QPoly p(deg + 1, Rational(0));
  p[deg] = 1;
  return poly_rem(std::move(p), cyclotomic_polynomial(L));
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

unsigned long euler_phi(int m) {
  unsigned long r = static_cast<unsigned long>(m);
  for (int p : prime_factors(m)) r = r / p * (p - 1);
  return r;
}

const std::vector<Rational>& cyclotomic_polynomial(int m) {
  if (m < 1) raise(ErrorCode::InvalidInput, "cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  std::lock_guard<std::mutex> lk(mu);
  for (int d = 1; d <= m; ++d) {
    if (m % d || cache.count(d)) continue;
    QPoly p(d + 1, Rational(0));
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = poly_quot_exact(p, cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(m);
}

int torsion_order(int conductor) {
  if (conductor < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  return conductor % 2 == 0 ? conductor : 2 * conductor;
}

void CycloScalar::canonicalize_() {
  const QPoly& phi = cyclotomic_polynomial(conductor_);
  QPoly c = poly_rem(coeffs_, phi);
  size_t dim = phi.size() - 1;
  c.resize(dim, Rational(0));

  bool tail_zero = true;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) { tail_zero = false; break; }
  if (tail_zero) {
    conductor_ = 1;
    coeffs_ = {c.empty() ? Rational(0) : c[0]};
    return;
  }

  // Descend to the smallest cyclotomic field containing the value.
  bool descended = true;
  while (descended) {
    descended = false;
    for (int p : prime_factors(conductor_)) {
      int sub = conductor_ / p;
      if (sub < 1) continue;
      size_t subdim = euler_phi(sub);
      std::vector<QPoly> cols(subdim);
      for (size_t j = 0; j < subdim; ++j) cols[j] = lift_power(sub, conductor_, j);
      auto sol = solve_columns(cols, c, euler_phi(conductor_));
      if (!sol) continue;
      conductor_ = sub;
      c = *sol;
      c.resize(subdim, Rational(0));
      if (subdim == 1) {
        // phi(sub) == 1 means sub is 1 or 2, i.e. the field is Q.
        conductor_ = 1;
        coeffs_ = {c[0]};
        return;
      }
      descended = true;
      break;
    }
  }
  coeffs_ = std::move(c);
}

CycloScalar CycloScalar::root_of_unity(int m, long k) {
  if (m < 1) raise(ErrorCode::InvalidInput, "root order must be >= 1");
  long r = k % m;
  if (r < 0) r += m;
  std::vector<Rational> c(static_cast<size_t>(r) + 1, Rational(0));
  c[static_cast<size_t>(r)] = 1;
  return from_coeffs(m, std::move(c));
}

CycloScalar CycloScalar::from_coeffs(int m, std::vector<Rational> coeffs) {
  if (m < 1) raise(ErrorCode::InvalidInput, "conductor must be >= 1");
  CycloScalar s;
  s.conductor_ = m;
  s.coeffs_ = std::move(coeffs);
  if (s.coeffs_.empty()) s.coeffs_.push_back(Rational(0));
  s.canonicalize_();
  return s;
}

const Rational& CycloScalar::rational_value() const {
  if (!is_rational())
    raise(ErrorCode::InvalidInput, "scalar is not rational: " + str());
  return coeffs_[0];
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (conductor_ == o.conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonicalize_();
    return *this;
  }
  int L = std::lcm(conductor_, o.conductor_);
  QPoly a(euler_phi(L), Rational(0)), b(a);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    QPoly pw = lift_power(conductor_, L, j);
    for (size_t i = 0; i < pw.size(); ++i) a[i] += coeffs_[j] * pw[i];
  }
  for (size_t j = 0; j < o.coeffs_.size(); ++j) {
    if (o.coeffs_[j] == 0) continue;
    QPoly pw = lift_power(o.conductor_, L, j);
    for (size_t i = 0; i < pw.size(); ++i) b[i] += o.coeffs_[j] * pw[i];
  }
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  conductor_ = L;
  coeffs_ = std::move(a);
  canonicalize_();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  // Fast path: rational times anything scales coordinates.
  if (o.is_rational()) {
    const Rational& f = o.coeffs_[0];
    if (f == 0) { *this = CycloScalar(); return *this; }
    for (auto& c : coeffs_) c *= f;
    if (is_rational()) return *this;
    canonicalize_();
    return *this;
  }
  if (is_rational()) {
    CycloScalar r = o;
    r *= *this;
    *this = std::move(r);
    return *this;
  }
  int L = std::lcm(conductor_, o.conductor_);
  auto lift_all = [&](const CycloScalar& s) {
    QPoly v(euler_phi(L), Rational(0));
    for (size_t j = 0; j < s.coeffs_.size(); ++j) {
      if (s.coeffs_[j] == 0) continue;
      QPoly pw = lift_power(s.conductor_, L, j);
      for (size_t i = 0; i < pw.size(); ++i) v[i] += s.coeffs_[j] * pw[i];
    }
    return v;
  };
  QPoly a = conductor_ == L ? coeffs_ : lift_all(*this);
  QPoly b = o.conductor_ == L ? o.coeffs_ : lift_all(o);
  conductor_ = L;
  coeffs_ = poly_rem(poly_mul(a, b), cyclotomic_polynomial(L));
  canonicalize_();
  return *this;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) raise(ErrorCode::ZeroInverse, "inverse of zero");
  if (is_rational()) return CycloScalar(Rational(1) / coeffs_[0]);

  // Extended Euclid against the (irreducible) cyclotomic polynomial.
  QPoly old_r = coeffs_, r = cyclotomic_polynomial(conductor_);
  trim(old_r);
  QPoly old_s = {Rational(1)}, s = {};
  while (!r.empty()) {
    QPoly q, rem;
    poly_divmod(old_r, r, q, rem);
    old_r = std::move(r);
    r = std::move(rem);
    QPoly qs = poly_mul(q, s);
    QPoly new_s(std::max(old_s.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < old_s.size(); ++i) new_s[i] += old_s[i];
    for (size_t i = 0; i < qs.size(); ++i) new_s[i] -= qs[i];
    trim(new_s);
    old_s = std::move(s);
    s = std::move(new_s);
  }
  // old_r is a nonzero constant gcd; old_s * this == old_r (mod Phi).
  if (old_r.size() != 1)
    raise(ErrorCode::InvalidInput, "cyclotomic inverse: unexpected gcd degree");
  Rational g = old_r[0];
  for (auto& c : old_s) c /= g;
  return from_coeffs(conductor_, std::move(old_s));
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar r(1), b = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

bool CycloScalar::operator<(const CycloScalar& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycloScalar::str() const {
  if (is_rational()) return rational_str(coeffs_[0]);
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    bool neg = coeffs_[i] < 0;
    Rational mag = neg ? Rational(-coeffs_[i]) : coeffs_[i];
    std::string body;
    if (i == 0) {
      body = rational_str(mag);
    } else {
      if (mag != 1) body = rational_str(mag) + "*";
      body += "z" + std::to_string(conductor_) + "^" + std::to_string(i);
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gcpoly
