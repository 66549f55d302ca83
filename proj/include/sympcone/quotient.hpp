#ifndef SYMPCONE_QUOTIENT_HPP
#define SYMPCONE_QUOTIENT_HPP

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace sympcone {

// Thrown when an element of Q[x]/f turns out to be a zero divisor; carries a
// proper factor of the modulus so the caller can refine (dynamic evaluation,
// no polynomial factorization needed).
struct ZeroDivisorSplit {
  PolyRat factor;
};

// Arithmetic in Q[x]/f for f monic squarefree (possibly reducible). Elements
// are reduced representatives.
class QuotientRing {
 public:
  explicit QuotientRing(PolyRat modulus) : f_(monic(modulus)) {
    if (f_.degree() < 1)
      throw std::invalid_argument("quotient ring: modulus must have positive degree");
  }

  const PolyRat& modulus() const { return f_; }

  PolyRat reduce(const PolyRat& p) const { return poly_divmod(p, f_).rem; }
  bool is_zero(const PolyRat& p) const { return reduce(p).is_zero(); }

  PolyRat mul(const PolyRat& a, const PolyRat& b) const { return reduce(a * b); }

  // Inverse of a reduced nonzero element; throws ZeroDivisorSplit when the
  // element is invertible over some roots of f but not others.
  PolyRat inverse(const PolyRat& a) const {
    auto xg = poly_xgcd(reduce(a), f_);
    if (xg.g.degree() == 0) return reduce(xg.u.scaled(Rational(1) / xg.g.coeff(0)));
    if (xg.g.degree() == f_.degree())
      throw std::invalid_argument("quotient ring: inverse of zero");
    throw ZeroDivisorSplit{xg.g};
  }

 private:
  PolyRat f_;
};

// Polynomials in t with coefficients in Q[x]/f: a vector of reduced
// PolyRat coefficients, ascending in t, no leading zeros mod f.
using QuotPoly = std::vector<PolyRat>;

inline QuotPoly qr_normalize(const QuotientRing& ring, QuotPoly p) {
  for (auto& c : p) c = ring.reduce(c);
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline QuotPoly qr_from_bivariate(const QuotientRing& ring,
                                  const Polynomial<PolyRat>& q) {
  QuotPoly p(q.coeffs().begin(), q.coeffs().end());
  return qr_normalize(ring, std::move(p));
}

// Make monic by the inverse of the leading coefficient.
inline QuotPoly qr_monic(const QuotientRing& ring, QuotPoly p) {
  if (p.empty()) return p;
  PolyRat inv = ring.inverse(p.back());
  for (auto& c : p) c = ring.mul(c, inv);
  return p;
}

// Remainder of a by monic b.
inline QuotPoly qr_rem(const QuotientRing& ring, QuotPoly a, const QuotPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    PolyRat lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = ring.reduce(a[shift + j] - lead * b[j]);
    a.pop_back();
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

// Monic gcd in (Q[x]/f)[t] by Euclid; every leading-coefficient inversion may
// raise ZeroDivisorSplit, in which case the caller refines f and retries.
inline QuotPoly qr_gcd(const QuotientRing& ring, QuotPoly a, QuotPoly b) {
  a = qr_normalize(ring, std::move(a));
  b = qr_normalize(ring, std::move(b));
  while (!b.empty()) {
    QuotPoly bm = qr_monic(ring, b);
    QuotPoly r = qr_rem(ring, std::move(a), bm);
    a = std::move(bm);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return qr_monic(ring, std::move(a));
}

}  // namespace sympcone

#endif
