#include "gcpoly/parser.hpp"

#include <cctype>
#include <string>

#include "gcpoly/error.hpp"

namespace gcpoly {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorCode::SyntaxError,
          what + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  long nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      fail("expected a number");
    long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000L) fail("number too large");
      ++pos;
    }
    return v;
  }
};

// A factor can start a new juxtaposed factor of the same term.
bool starts_factor(char c) {
  return c == 'x' || c == 'z' || c == '(' || c == '[' ||
         std::isdigit((unsigned char)c);
}

class PolyParser {
 public:
  PolyParser(const std::string& text, const GroupPtr& group)
      : cur_{text}, group_(group) {}

  GPolynomial run() {
    GPolynomial p = poly();
    if (!cur_.done()) cur_.fail("unexpected trailing input");
    return p;
  }

 private:
  Cursor cur_;
  const GroupPtr& group_;

  GPolynomial poly() {
    bool neg = cur_.eat('-');
    GPolynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (cur_.eat('+'))
        p += term();
      else if (cur_.eat('-'))
        p -= term();
      else
        return p;
    }
  }

  GPolynomial term() {
    GPolynomial p = factor();
    for (;;) {
      if (cur_.eat('*')) {
        p *= factor();
        continue;
      }
      if (starts_factor(cur_.peek())) {
        p *= factor();
        continue;
      }
      return p;
    }
  }

  GPolynomial factor() {
    GPolynomial p = base();
    while (cur_.eat('^')) {
      long e = cur_.nat();
      GPolynomial b = p;
      p = GPolynomial::constant(group_, CycloScalar(1));
      for (long i = 0; i < e; ++i) p *= b;
    }
    return p;
  }

  GPolynomial base() {
    char c = cur_.peek();
    if (c == 'x') return variable();
    if (c == 'z') return root();
    if (std::isdigit((unsigned char)c)) return rational();
    if (cur_.eat('(')) {
      GPolynomial p = poly();
      cur_.expect(')');
      return p;
    }
    if (cur_.eat('[')) {
      GPolynomial p = poly();
      cur_.expect(',');
      GPolynomial q = poly();
      cur_.expect(']');
      return p * q - q * p;
    }
    cur_.fail("expected a variable, a scalar, '(' or '['");
  }

  GPolynomial variable() {
    cur_.expect('x');
    long index = cur_.nat();
    int degree = group_->identity();
    // The tag bracket binds tightly: "x1 [p,q]" is a product with a
    // commutator, "x1[g]" is a tagged variable.
    if (cur_.pos < cur_.s.size() && cur_.s[cur_.pos] == '[') {
      ++cur_.pos;
      size_t start = cur_.pos;
      while (cur_.pos < cur_.s.size() && cur_.s[cur_.pos] != ']') ++cur_.pos;
      if (cur_.pos >= cur_.s.size()) cur_.fail("unterminated variable tag");
      std::string name = cur_.s.substr(start, cur_.pos - start);
      ++cur_.pos;
      // trim the tag
      while (!name.empty() && std::isspace((unsigned char)name.front()))
        name.erase(name.begin());
      while (!name.empty() && std::isspace((unsigned char)name.back()))
        name.pop_back();
      auto g = group_->find(name);
      if (!g)
        raise(ErrorCode::UnknownGroupElement,
              "'" + name + "' is not an element of the grading group");
      degree = *g;
    }
    return GPolynomial::variable(group_, (int)index, degree);
  }

  GPolynomial root() {
    cur_.expect('z');
    long m = cur_.nat();
    if (m < 1) cur_.fail("root order must be positive");
    long k = 1;
    if (cur_.eat('^')) k = cur_.nat();
    return GPolynomial::constant(group_, CycloScalar::root_of_unity((int)m, k));
  }

  GPolynomial rational() {
    long num = cur_.nat();
    if (cur_.eat('/')) {
      long den = cur_.nat();
      if (den == 0) cur_.fail("division by zero");
      Rational q(num, den);
      q.canonicalize();
      return GPolynomial::constant(group_, CycloScalar(q));
    }
    return GPolynomial::constant(group_, CycloScalar(num));
  }
};

bool starts_mfactor(char c) {
  return c == 'E' || c == 'e' || c == 'z' || c == '(' ||
         std::isdigit((unsigned char)c);
}

class MatrixParser {
 public:
  MatrixParser(const std::string& text, const GradedMatrixAlgebra& A)
      : cur_{text}, A_(A) {}

  RingMatrix run() {
    RingMatrix m = matrix();
    if (!cur_.done()) cur_.fail("unexpected trailing input");
    return m;
  }

  RingMatrix matrix() {
    bool neg = cur_.eat('-');
    RingMatrix m = mterm();
    if (neg) m = -m;
    for (;;) {
      if (cur_.eat('+'))
        m += mterm();
      else if (cur_.eat('-'))
        m -= mterm();
      else
        return m;
    }
  }

 private:
  Cursor cur_;
  const GradedMatrixAlgebra& A_;

  RingMatrix mterm() {
    RingMatrix m = mfactor();
    for (;;) {
      if (cur_.eat('*')) {
        m = m * mfactor();
        continue;
      }
      if (starts_mfactor(cur_.peek())) {
        m = m * mfactor();
        continue;
      }
      return m;
    }
  }

  RingMatrix mfactor() {
    RingMatrix m = mbase();
    while (cur_.eat('^')) {
      long e = cur_.nat();
      if (e > 64) cur_.fail("exponent too large");
      m = m.pow((int)e);
    }
    return m;
  }

  RingMatrix scalar_matrix(const CycloScalar& c) {
    RingMatrix m = RingMatrix::identity(A_.n, A_.budget);
    m.scale(c);
    return m;
  }

  RingMatrix mbase() {
    char c = cur_.peek();
    if (c == 'E') {
      ++cur_.pos;
      int i, j;
      // E12 is rows/columns as single digits; En,m takes any size.
      long first = cur_.nat();
      if (cur_.eat(',')) {
        i = (int)first;
        j = (int)cur_.nat();
      } else if (first >= 11 && first <= 88) {
        i = (int)(first / 10);
        j = (int)(first % 10);
      } else {
        cur_.fail("matrix unit needs two indices");
      }
      if (i < 1 || i > A_.n || j < 1 || j > A_.n)
        cur_.fail("matrix unit index out of range");
      return RingMatrix::scalar_unit(A_.n, A_.budget, i - 1, j - 1);
    }
    if (c == 'e') {
      ++cur_.pos;
      long i = cur_.nat();
      if (i < 1 || i > A_.budget)
        raise(ErrorCode::BudgetExceeded,
              "generator e" + std::to_string(i) + " is outside the budget " +
                  std::to_string(A_.budget));
      RingMatrix m = RingMatrix::identity(A_.n, A_.budget);
      for (int r = 0; r < A_.n; ++r)
        m.at(r, r) = GrassmannElement::generator(A_.budget, (int)i);
      return m;
    }
    if (c == 'z') {
      ++cur_.pos;
      long m = cur_.nat();
      if (m < 1) cur_.fail("root order must be positive");
      long k = 1;
      if (cur_.eat('^')) k = cur_.nat();
      return scalar_matrix(CycloScalar::root_of_unity((int)m, k));
    }
    if (std::isdigit((unsigned char)c)) {
      long num = cur_.nat();
      if (cur_.eat('/')) {
        long den = cur_.nat();
        if (den == 0) cur_.fail("division by zero");
        Rational q(num, den);
        q.canonicalize();
        return scalar_matrix(CycloScalar(q));
      }
      return scalar_matrix(CycloScalar(num));
    }
    if (cur_.eat('(')) {
      RingMatrix m = matrix();
      cur_.expect(')');
      return m;
    }
    cur_.fail("expected a matrix unit, generator, scalar or '('");
  }
};

}  // namespace

GPolynomial parse_polynomial(const std::string& text, const GroupPtr& group) {
  return PolyParser(text, group).run();
}

CycloScalar parse_scalar(const std::string& text) {
  GPolynomial p = parse_polynomial(text, FiniteGroup::trivial());
  if (p.is_zero()) return CycloScalar(0);
  if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
    raise(ErrorCode::SyntaxError, "expected a scalar, got a polynomial");
  return p.terms().begin()->second;
}

RingMatrix parse_matrix(const std::string& text, const GradedMatrixAlgebra& A) {
  return MatrixParser(text, A).run();
}

std::pair<GVar, RingMatrix> parse_assignment(const std::string& text,
                                             const GradedMatrixAlgebra& A) {
  size_t eq = text.find('=');
  if (eq == std::string::npos)
    raise(ErrorCode::SyntaxError, "assignment needs the form x<i>[tag] = value");
  GPolynomial lhs = parse_polynomial(text.substr(0, eq), A.grading.group);
  if (lhs.terms().size() != 1 || lhs.terms().begin()->first.size() != 1 ||
      !(lhs.terms().begin()->second == CycloScalar(1)))
    raise(ErrorCode::SyntaxError,
          "the left side of an assignment must be a single variable");
  GVar v = lhs.terms().begin()->first[0];
  RingMatrix m = parse_matrix(text.substr(eq + 1), A);
  return {v, m};
}

}  // namespace gcpoly
