#ifndef SYMPCONE_POLYNOMIAL_HPP
#define SYMPCONE_POLYNOMIAL_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace sympcone {

// Univariate polynomial, coefficients ascending, no trailing zeros (so the
// zero polynomial has an empty coefficient list and degree -1). T is Rational
// almost everywhere; Polynomial<Polynomial<Rational>> serves as the bivariate
// type for spectral curves.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const T& constant) : c_{constant} { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial from_coeffs(std::vector<T> coeffs) {
    Polynomial p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static Polynomial variable() { return Polynomial{T(), T(1)}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
  const std::vector<T>& coeffs() const { return c_; }

  const T& leading() const {
    if (c_.empty()) throw std::invalid_argument("polynomial: zero has no leading coeff");
    return c_.back();
  }

  bool operator==(const Polynomial& o) const = default;

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return from_coeffs(std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return from_coeffs(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<T> r = c_;
    for (auto& v : r) v = -v;
    return from_coeffs(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<T> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(r));
  }

  Polynomial scaled(const T& s) const {
    std::vector<T> r = c_;
    for (auto& v : r) v = v * s;
    return from_coeffs(std::move(r));
  }

  Polynomial shifted(std::size_t k) const {  // multiply by x^k
    if (is_zero()) return Polynomial();
    std::vector<T> r(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return from_coeffs(std::move(r));
  }

  T evaluate(const T& v) const {
    T acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * T(static_cast<long>(i));
    return from_coeffs(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T()) c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyRat = Polynomial<Rational>;

inline void divide_by_int(PolyRat& p, long k) {
  p = p.scaled(Rational(1) / Rational(k));
}

struct PolyDivMod {
  PolyRat quot, rem;
};

inline PolyDivMod poly_divmod(const PolyRat& a, const PolyRat& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial: division by zero");
  std::vector<Rational> r(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {PolyRat(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[i] * inv;
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
  }
  return {PolyRat::from_coeffs(std::move(q)), PolyRat::from_coeffs(std::move(r))};
}

inline PolyRat monic(const PolyRat& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading());
}

inline PolyRat poly_derivative(const PolyRat& p) { return p.derivative(); }

// Signed content: p = content(p) * primitive_part(p) with the primitive part
// having coprime integer coefficients and positive leading coefficient.
inline Rational content(const PolyRat& p) {
  if (p.is_zero()) return Rational(0);
  Int l(1);
  for (const auto& c : p.coeffs())
    if (c != 0) l = lcm(l, denominator(c));
  Int g(0);
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    g = gcd(g, Int(numerator(c) * (l / denominator(c))));
  }
  Rational cont = make_rational(g, l);
  if (p.leading() < 0) cont = -cont;
  return cont;
}

inline PolyRat primitive_part(const PolyRat& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / content(p));
}

// Pseudo-remainder: remainder of lc(b)^(deg a - deg b + 1) * a by b.
inline PolyRat prem(const PolyRat& a, const PolyRat& b) {
  std::size_t e = static_cast<std::size_t>(a.degree() - b.degree() + 1);
  return poly_divmod(a.scaled(rational_pow(b.leading(), e)), b).rem;
}

// Monic gcd via the subresultant PRS on primitive parts; the g*h^delta
// divisions keep intermediate coefficients small. gcd(0,0) = 0.
inline PolyRat poly_gcd(const PolyRat& a, const PolyRat& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  PolyRat A = primitive_part(a), B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  if (B.degree() == 0) return PolyRat(Rational(1));
  Rational g(1), h(1);
  while (true) {
    std::size_t delta = static_cast<std::size_t>(A.degree() - B.degree());
    PolyRat r = prem(A, B);
    if (r.is_zero()) return monic(primitive_part(B));
    if (B.degree() == 0) return PolyRat(Rational(1));
    PolyRat next = r.scaled(Rational(1) / (g * rational_pow(h, delta)));
    A = B;
    B = next;
    g = A.leading();
    if (delta > 0) h = rational_pow(g, delta) / rational_pow(h, delta - 1);
    if (B.degree() == 0) return PolyRat(Rational(1));
  }
}

// Extended Euclid over Q: g = u*a + v*b with g monic (or zero).
struct PolyXgcd {
  PolyRat g, u, v;
};

inline PolyXgcd poly_xgcd(PolyRat a, PolyRat b) {
  PolyRat u0(Rational(1)), v0, u1, v1(Rational(1));
  while (!b.is_zero()) {
    auto qr = poly_divmod(a, b);
    PolyRat u2 = u0 - qr.quot * u1;
    PolyRat v2 = v0 - qr.quot * v1;
    a = b;
    b = qr.rem;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (a.is_zero()) return {a, u0, v0};
  Rational inv = Rational(1) / a.leading();
  return {a.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

// Resultant via the subresultant PRS (Cohen, Alg. 3.3.7). Conventions:
// both arguments zero is rejected, exactly one zero gives 0, two nonzero
// constants give 1.
inline Rational poly_resultant(const PolyRat& pa, const PolyRat& pb) {
  if (pa.is_zero() && pb.is_zero())
    throw std::invalid_argument("resultant: both polynomials are zero");
  if (pa.is_zero() || pb.is_zero()) return Rational(0);
  std::size_t da = static_cast<std::size_t>(pa.degree());
  std::size_t db = static_cast<std::size_t>(pb.degree());
  if (da == 0 && db == 0) return Rational(1);
  if (da == 0) return rational_pow(pa.coeff(0), db);
  if (db == 0) return rational_pow(pb.coeff(0), da);

  Rational ca = content(pa), cb = content(pb);
  PolyRat A = primitive_part(pa), B = primitive_part(pb);
  Rational mult = rational_pow(ca, db) * rational_pow(cb, da);
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((da & 1) && (db & 1)) sign = -sign;
  }
  Rational g(1), h(1);
  while (true) {
    std::size_t delta = static_cast<std::size_t>(A.degree() - B.degree());
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    PolyRat r = prem(A, B);
    A = B;
    if (r.is_zero()) return Rational(0);  // positive-degree common factor
    B = r.scaled(Rational(1) / (g * rational_pow(h, delta)));
    g = A.leading();
    if (delta > 0) h = rational_pow(g, delta) / rational_pow(h, delta - 1);
    if (B.degree() == 0) break;
  }
  std::size_t dA = static_cast<std::size_t>(A.degree());
  Rational res = rational_pow(B.coeff(0), dA);
  if (dA > 1) res /= rational_pow(h, dA - 1);
  return mult * Rational(sign) * res;
}

inline PolyRat poly_squarefree_part(const PolyRat& b) {
  if (b.is_zero()) return b;
  if (b.degree() == 0) return PolyRat(Rational(1));
  return monic(poly_divmod(b, poly_gcd(b, b.derivative())).quot);
}

// Yun's squarefree factorization: pairwise-coprime monic squarefree factors
// with multiplicities, constants dropped.
inline std::vector<std::pair<PolyRat, int>> yun_squarefree(const PolyRat& f0) {
  std::vector<std::pair<PolyRat, int>> out;
  if (f0.is_zero() || f0.degree() == 0) return out;
  PolyRat f = monic(f0);
  PolyRat g = poly_gcd(f, f.derivative());
  PolyRat b = poly_divmod(f, g).quot;
  PolyRat c = poly_divmod(f.derivative(), g).quot;
  PolyRat d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    PolyRat p = poly_gcd(b, d);
    if (p.degree() > 0) out.emplace_back(p, i);
    b = poly_divmod(b, p).quot;
    c = poly_divmod(d, p).quot;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace detail {
inline std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d(1); d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}
}  // namespace detail

// All rational roots, ascending. Root candidates come from the rational root
// theorem applied to the primitive part.
inline std::vector<Rational> rational_roots(const PolyRat& p0) {
  if (p0.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  PolyRat p = primitive_part(p0);
  std::size_t val = 0;
  while (p.coeff(val) == 0) ++val;
  if (val > 0) {
    roots.push_back(Rational(0));
    std::vector<Rational> rest(p.coeffs().begin() + val, p.coeffs().end());
    p = PolyRat::from_coeffs(std::move(rest));
  }
  if (p.degree() >= 1) {
    Int a0 = numerator(p.coeff(0));
    Int an = numerator(p.leading());
    for (const Int& num : detail::divisors(a0))
      for (const Int& den : detail::divisors(an)) {
        Rational c = make_rational(num, den);
        if (p.evaluate(c) == 0) roots.push_back(c);
        if (p.evaluate(-c) == 0) roots.push_back(-c);
      }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline std::string to_string(const PolyRat& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// --- exact division and Bareiss determinant over an integral domain -------

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline PolyRat exact_div(const PolyRat& a, const PolyRat& b) {
  auto qr = poly_divmod(a, b);
  if (!qr.rem.is_zero()) throw std::logic_error("exact_div: not divisible");
  return qr.quot;
}

// Fraction-free determinant; all divisions are exact in the entry ring.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  m.require_square();
  std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev = T(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == T()) ++p;
    if (p == n) return T();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = T();
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign < 0 ? T() - det : det;
}

// Resultant as the Sylvester determinant; generic so it also serves
// elimination of one variable from bivariate polynomials (T = PolyRat).
template <class T>
T sylvester_resultant(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("resultant: both polynomials are zero");
  if (a.is_zero() || b.is_zero()) return T();
  std::size_t m = static_cast<std::size_t>(a.degree());
  std::size_t n = static_cast<std::size_t>(b.degree());
  if (m == 0 && n == 0) return T(1);
  Matrix<T> s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = a.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = b.coeff(n - j);
  return bareiss_determinant(std::move(s));
}

}  // namespace sympcone

#endif
