#ifndef SYMPCONE_SPECTRAL_HPP
#define SYMPCONE_SPECTRAL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "charpoly.hpp"
#include "quotient.hpp"
#include "symplectic.hpp"

namespace sympcone {

// Desk-scale model of the Hitchin base: sections of K^{2k} are univariate
// polynomials of bounded degree on one affine chart, points of the curve are
// rational x-values.
struct SpectralData {
  std::size_t n = 0;
  std::vector<PolyRat> s;               // s_2, s_4, ..., s_{2n}
  std::vector<std::size_t> degree_bounds;  // per-slot max degree d_k

  const PolyRat& s2k(std::size_t k) const { return s.at(k - 1); }  // 1-based
};

// Default chart bound: deg s_{2k} <= 2k(2g-2) with g = 3.
inline std::size_t default_degree_bound(std::size_t k) { return 8 * k; }

inline SpectralData make_spectral_data(std::size_t n, std::vector<PolyRat> s,
                                       std::vector<std::size_t> bounds = {}) {
  if (n == 0) throw std::invalid_argument("spectral data: n must be >= 1");
  if (s.size() != n) throw std::invalid_argument("spectral data: expected n polynomials");
  if (bounds.empty())
    for (std::size_t k = 1; k <= n; ++k)
      bounds.push_back(std::max<std::size_t>(
          default_degree_bound(k),
          s[k - 1].is_zero() ? 0 : static_cast<std::size_t>(s[k - 1].degree())));
  if (bounds.size() != n) throw std::invalid_argument("spectral data: expected n degree bounds");
  for (std::size_t k = 1; k <= n; ++k)
    if (!s[k - 1].is_zero() && static_cast<std::size_t>(s[k - 1].degree()) > bounds[k - 1])
      throw std::invalid_argument("spectral data: deg s_" + std::to_string(2 * k) +
                                  " exceeds its bound");
  return SpectralData{n, std::move(s), std::move(bounds)};
}

// Polynomial Higgs field: a 2n x 2n matrix of polynomials that is
// symmetric-symplectic identically, i.e. J*theta(x) is a symmetric
// polynomial matrix.
struct PolyHiggs {
  SymplecticSpace space;
  Matrix<PolyRat> entries;
};

inline PolyHiggs make_poly_higgs(const SymplecticSpace& sp, Matrix<PolyRat> entries) {
  if (entries.rows() != sp.dim() || entries.cols() != sp.dim())
    throw std::invalid_argument("higgs field: matrix is not 2n x 2n");
  Matrix<PolyRat> jth(sp.dim(), sp.dim());
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = 0; j < sp.dim(); ++j)
      for (std::size_t k = 0; k < sp.dim(); ++k)
        if (sp.j()(i, k) != 0) jth(i, j) = jth(i, j) + entries(k, j).scaled(sp.j()(i, k));
  if (!(jth == jth.transpose()))
    throw std::invalid_argument(
        "higgs field: J*theta is not symmetric (theta violates the symmetric-symplectic identity)");
  return PolyHiggs{sp, std::move(entries)};
}

inline PolyHiggs random_poly_higgs(const SymplecticSpace& sp, Rng& rng,
                                   std::size_t max_degree = 4, long bound = 3) {
  std::size_t d = sp.dim();
  Matrix<PolyRat> s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Rational> cs(max_degree + 1);
      for (auto& c : cs) c = rng.small_rational(bound);
      s(i, j) = PolyRat::from_coeffs(std::move(cs));
      s(j, i) = s(i, j);
    }
  // theta = -J S is symmetric-symplectic for any symmetric S.
  Matrix<PolyRat> theta(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (sp.j()(i, k) != 0) theta(i, j) = theta(i, j) - s(k, j).scaled(sp.j()(i, k));
  return make_poly_higgs(sp, std::move(theta));
}

// Hitchin map: s_{2k}(x) = tr(Lambda^{2k} theta(x)) as polynomial identities.
// The odd exterior traces vanish identically; that is re-verified here since
// it is exactly the evenness of the spectral curve.
inline SpectralData hitchin(const PolyHiggs& theta) {
  const SymplecticSpace& sp = theta.space;
  Polynomial<PolyRat> cp = charpoly(theta.entries);
  std::vector<PolyRat> s;
  for (std::size_t k = 1; k <= sp.dim(); ++k) {
    PolyRat ck = cp.coeff(sp.dim() - k);
    if (k % 2 == 1) {
      if (!ck.is_zero())
        throw std::logic_error("hitchin: odd characteristic coefficient did not vanish");
    } else {
      s.push_back(ck);  // det(yI - theta) = y^{2n} + sum s_{2k} y^{2n-2k}
    }
  }
  std::vector<std::size_t> bounds;
  for (std::size_t k = 1; k <= sp.n(); ++k)
    bounds.push_back(std::max<std::size_t>(
        default_degree_bound(k),
        s[k - 1].is_zero() ? 0 : static_cast<std::size_t>(s[k - 1].degree())));
  return SpectralData{sp.n(), std::move(s), std::move(bounds)};
}

// The C*-action on the Hitchin base: s_{2k} picks up weight 2k, so that
// hitchin(lambda * theta) = cstar_scale(hitchin(theta), lambda).
inline SpectralData cstar_scale(const SpectralData& sd, const Rational& lambda) {
  SpectralData out = sd;
  for (std::size_t k = 1; k <= sd.n; ++k)
    out.s[k - 1] = sd.s[k - 1].scaled(rational_pow(lambda, 2 * k));
  return out;
}

inline PolyHiggs scale_higgs(const PolyHiggs& theta, const Rational& lambda) {
  Matrix<PolyRat> e = theta.entries;
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) = e(i, j).scaled(lambda);
  return PolyHiggs{theta.space, std::move(e)};
}

// The spectral curve y^{2n} + s_2(x) y^{2n-2} + ... + s_{2n}(x), as a
// polynomial in y with coefficients in Q[x]. Invariant under y -> -y since
// only even powers of y occur.
inline Polynomial<PolyRat> spectral_curve(const SpectralData& sd) {
  std::vector<PolyRat> c(2 * sd.n + 1);
  c[2 * sd.n] = PolyRat(Rational(1));
  for (std::size_t k = 1; k <= sd.n; ++k) c[2 * (sd.n - k)] = sd.s2k(k);
  return Polynomial<PolyRat>::from_coeffs(std::move(c));
}

inline Polynomial<PolyRat> substitute_neg_y(const Polynomial<PolyRat>& p) {
  std::vector<PolyRat> c(p.coeffs());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial<PolyRat>::from_coeffs(std::move(c));
}

inline PolyRat evaluate_x(const Polynomial<PolyRat>& p, const Rational& x0) {
  std::vector<Rational> c;
  for (const auto& ci : p.coeffs()) c.push_back(ci.evaluate(x0));
  return PolyRat::from_coeffs(std::move(c));
}

// --- discriminant classification -------------------------------------------

struct DegenerateSpectralDataError : std::invalid_argument {
  DegenerateSpectralDataError()
      : std::invalid_argument(
            "degenerate spectral data: s_{2n} is identically zero, the curve is "
            "non-reduced or reducible and outside the discriminant dichotomy") {}
};

// D1: the curve has a node on the horizontal axis, i.e. s_{2n} has a multiple
// root; witness is the multiple-root factor gcd(s_{2n}, s_{2n}').
// D2: the reduced curve Q(x,t) = t^n + s_2 t^{n-1} + ... + s_{2n} (t = y^2)
// has a singular point off the t = 0 axis; witness is the x-eliminant factor
// certifying it. A present-but-zero D2 witness means the eliminant vanishes
// identically (a one-dimensional family of symmetric nodes, e.g. Q a square).
struct DiscriminantClass {
  enum class Kind { Smooth, D1, D2, Both } kind = Kind::Smooth;
  std::optional<PolyRat> d1_witness;
  std::optional<PolyRat> d2_witness;
};

inline const char* to_string(DiscriminantClass::Kind k) {
  switch (k) {
    case DiscriminantClass::Kind::Smooth: return "Smooth";
    case DiscriminantClass::Kind::D1: return "D1";
    case DiscriminantClass::Kind::D2: return "D2";
    case DiscriminantClass::Kind::Both: return "Both";
  }
  return "?";
}

namespace detail {

// Q, Q_t, Q_x as polynomials in t over Q[x].
inline Polynomial<PolyRat> reduced_curve(const SpectralData& sd) {
  std::vector<PolyRat> c(sd.n + 1);
  c[sd.n] = PolyRat(Rational(1));
  for (std::size_t k = 1; k <= sd.n; ++k) c[sd.n - k] = sd.s2k(k);
  return Polynomial<PolyRat>::from_coeffs(std::move(c));
}

inline Polynomial<PolyRat> d_dx(const Polynomial<PolyRat>& q) {
  std::vector<PolyRat> c;
  for (const auto& ci : q.coeffs()) c.push_back(ci.derivative());
  return Polynomial<PolyRat>::from_coeffs(std::move(c));
}

// Does the common vanishing locus of (Q, Q_t, Q_x) above the roots of the
// squarefree modulus f contain a point with t != 0? Decided exactly in
// (Q[x]/f)[t]; zero divisors refine f (dynamic evaluation).
inline bool d2_over_factor(const Polynomial<PolyRat>& q, const Polynomial<PolyRat>& qt,
                           const Polynomial<PolyRat>& qx, PolyRat f,
                           std::vector<PolyRat>* certifying) {
  std::vector<PolyRat> stack{monic(f)};
  bool found = false;
  while (!stack.empty()) {
    PolyRat fi = stack.back();
    stack.pop_back();
    try {
      QuotientRing ring(fi);
      QuotPoly g = qr_gcd(ring, qr_from_bivariate(ring, q), qr_from_bivariate(ring, qt));
      g = qr_gcd(ring, std::move(g), qr_from_bivariate(ring, qx));
      if (g.size() <= 1) continue;  // constant gcd: no singular point over fi
      // Strip the t-power: find the least t-degree with invertible coefficient.
      std::size_t val = g.size() - 1;  // monic: worst case G = t^deg
      bool split = false;
      for (std::size_t j = 0; j + 1 < g.size(); ++j) {
        if (g[j].is_zero()) continue;
        PolyRat h = poly_gcd(g[j], fi);
        if (h.degree() == 0) {
          val = j;
          break;
        }
        // proper factor: the coefficient vanishes over some roots only
        stack.push_back(h);
        stack.push_back(monic(poly_divmod(fi, h).quot));
        split = true;
        break;
      }
      if (split) continue;
      if (val + 1 < g.size()) {
        found = true;
        if (certifying) certifying->push_back(fi);
      }
    } catch (const ZeroDivisorSplit& z) {
      PolyRat h = monic(z.factor);
      stack.push_back(h);
      stack.push_back(monic(poly_divmod(fi, h).quot));
    }
  }
  return found;
}

}  // namespace detail

inline DiscriminantClass classify_discriminant(const SpectralData& sd) {
  const PolyRat& s2n = sd.s2k(sd.n);
  if (s2n.is_zero()) throw DegenerateSpectralDataError();

  DiscriminantClass out;
  PolyRat d1 = poly_gcd(s2n, s2n.derivative());
  bool has_d1 = d1.degree() >= 1;
  if (has_d1) out.d1_witness = d1;

  bool has_d2 = false;
  if (sd.n >= 2) {
    Polynomial<PolyRat> q = detail::reduced_curve(sd);
    Polynomial<PolyRat> qt = q.derivative();
    Polynomial<PolyRat> qx = detail::d_dx(q);
    PolyRat r1 = sylvester_resultant(q, qt);
    PolyRat r2 = sylvester_resultant(q, qx);
    PolyRat g = poly_gcd(r1, r2);
    if (g.is_zero()) {
      // Q has a repeated t-factor over Q(x): a curve of singular points, off
      // the axis because t does not divide Q (s_{2n} != 0).
      has_d2 = true;
      out.d2_witness = PolyRat();
    } else if (g.degree() >= 1) {
      std::vector<PolyRat> certifying;
      for (const auto& [factor, mult] : yun_squarefree(g))
        if (detail::d2_over_factor(q, qt, qx, factor, &certifying)) has_d2 = true;
      if (has_d2) {
        PolyRat w(Rational(1));
        for (const auto& f : certifying) w = w * f;
        out.d2_witness = monic(w);
      }
    }
  }

  using K = DiscriminantClass::Kind;
  out.kind = has_d1 ? (has_d2 ? K::Both : K::D1) : (has_d2 ? K::D2 : K::Smooth);
  return out;
}

// --- vanishing subspaces and the trace-surjectivity model ------------------

// Coefficient vectors of polynomials of degree <= d vanishing to order >= m
// at x0; codim is exactly m.
inline Subspace vanishing_subspace(std::size_t d, const Rational& x0, std::size_t m) {
  if (m > d + 1)
    throw std::invalid_argument("vanishing_subspace: order exceeds dimension (m > d+1)");
  if (m == 0) return Subspace::full(d + 1);
  // Row j: coefficients of p^(j)(x0) = sum_i i(i-1)...(i-j+1) x0^{i-j} c_i.
  Mat cond(m, d + 1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = j; i <= d; ++i) {
      Rational fall(1);
      for (std::size_t t = 0; t < j; ++t) fall *= Rational(static_cast<long>(i - t));
      cond(j, i) = fall * rational_pow(x0, i - j);
    }
  return kernel(cond);
}

// Outcome of the double-root membership test on s_{2n}.
struct DoubleRootWitness {
  std::variant<std::monostate, Rational, PolyRat> value;  // none / x0 / irrational factor
  bool is_none() const { return value.index() == 0; }
  bool is_rational() const { return value.index() == 1; }
  const Rational& root() const { return std::get<Rational>(value); }
  const PolyRat& factor() const { return std::get<PolyRat>(value); }
};

// b has a double root iff gcd(b, b') is nonconstant; when the double root is
// rational, membership b in H^0(K^{2n}(-2 x0)) is confirmed through
// vanishing_subspace.
inline DoubleRootWitness d1_as_union_check(const PolyRat& b) {
  if (b.is_zero()) throw std::invalid_argument("d1_as_union_check: zero polynomial");
  DoubleRootWitness w;
  PolyRat g = poly_gcd(b, b.derivative());
  if (g.degree() < 1) return w;
  auto roots = rational_roots(g);
  if (roots.empty()) {
    w.value = g;
    return w;
  }
  Rational x0 = roots.front();
  auto d = static_cast<std::size_t>(b.degree());
  Vec coeffs(d + 1);
  for (std::size_t i = 0; i <= d; ++i) coeffs[i] = b.coeff(i);
  if (!vanishing_subspace(d, x0, 2).contains(coeffs))
    throw std::logic_error("d1_as_union_check: membership certification failed");
  w.value = x0;
  return w;
}

// True iff some 2k-fold product of elements of V has nonzero trace, decided
// by exhaustive search with shared prefixes. When V spans End_Sp this is
// always true (the identity-splitting argument), which the suites verify.
inline bool trace_surjectivity_check(const SymplecticSpace& sp, const std::vector<Mat>& v,
                                     std::size_t k) {
  if (k == 0) throw std::invalid_argument("trace_surjectivity_check: k must be >= 1");
  for (const auto& m : v)
    if (!is_end_sp(sp, m))
      throw std::invalid_argument("trace_surjectivity_check: element is not symmetric-symplectic");
  std::size_t depth = 2 * k;
  std::vector<std::size_t> index(depth, 0);
  // DFS over index tuples; prefix products are reused along the branch.
  std::vector<Mat> prefix(depth + 1);
  prefix[0] = Mat::identity(sp.dim());
  if (v.empty()) return false;
  std::size_t level = 0;
  while (true) {
    while (level < depth) {
      prefix[level + 1] = prefix[level] * v[index[level]];
      ++level;
    }
    if (prefix[depth].trace() != 0) return true;
    // advance odometer
    while (level > 0 && index[level - 1] + 1 == v.size()) {
      index[level - 1] = 0;
      --level;
    }
    if (level == 0) return false;
    ++index[level - 1];
    --level;
  }
}

}  // namespace sympcone

#endif
