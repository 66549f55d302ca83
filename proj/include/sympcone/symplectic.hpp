#ifndef SYMPCONE_SYMPLECTIC_HPP
#define SYMPCONE_SYMPLECTIC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rng.hpp"
#include "subspace.hpp"

namespace sympcone {

// The standard symplectic structure on Q^(2n): J = [[0, I],[-I, 0]] and
// omega(u, v) = u^T J v. Everything in the library is expressed in this
// standard form.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("symplectic space: n must be >= 1");
    j_ = Mat(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      j_(i, n + i) = 1;
      j_(n + i, i) = -1;
    }
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const Mat& j() const { return j_; }

  Rational omega(const Vec& u, const Vec& v) const {
    Vec jv = j_.apply(v);
    Rational s(0);
    for (std::size_t i = 0; i < dim(); ++i) s += u[i] * jv[i];
    return s;
  }

  void require_endo_shape(const Mat& a) const {
    if (a.rows() != dim() || a.cols() != dim())
      throw std::invalid_argument("matrix is not 2n x 2n for this space");
  }

 private:
  std::size_t n_;
  Mat j_;
};

// Multiplier c with A^T J A = c J, if it exists; nullopt means A is not in
// the conformal symplectic group Gp(2n).
inline std::optional<Rational> gp_multiplier(const SymplecticSpace& sp, const Mat& a) {
  sp.require_endo_shape(a);
  Mat lhs = a.transpose() * sp.j() * a;
  // c is read off the first structurally nonzero entry of J, then all 4n^2
  // entries are verified; no least-squares anywhere.
  Rational c = lhs(0, sp.n());
  if (c == 0) return std::nullopt;
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = 0; j < sp.dim(); ++j)
      if (lhs(i, j) != c * sp.j()(i, j)) return std::nullopt;
  return c;
}

struct NotInGpError : std::domain_error {
  NotInGpError() : std::domain_error("matrix is not in Gp(2n): A^T J A is not a multiple of J") {}
};

// det A = q(A)^n, exactly.
inline bool check_det_identity(const SymplecticSpace& sp, const Mat& a) {
  auto c = gp_multiplier(sp, a);
  if (!c) throw NotInGpError();
  return determinant(a) == rational_pow(*c, sp.n());
}

// Symmetric symplectic endomorphisms: omega(u, Av) = -omega(Au, v), i.e. JA
// symmetric. This is the fiber model of End_Sp.
inline bool is_end_sp(const SymplecticSpace& sp, const Mat& a) {
  sp.require_endo_shape(a);
  Mat ja = sp.j() * a;
  return ja == ja.transpose();
}

// Anti-symmetric symplectic endomorphisms: omega(Au, v) = omega(u, Av), i.e.
// JA anti-symmetric. Contains the identity and all even powers of End_Sp
// elements.
inline bool is_end_ant(const SymplecticSpace& sp, const Mat& a) {
  sp.require_endo_shape(a);
  Mat ja = sp.j() * a;
  return ja == -ja.transpose();
}

inline Vec flatten(const Mat& m) { return m.flat(); }

inline Mat unflatten(const SymplecticSpace& sp, const Vec& v) {
  if (v.size() != sp.dim() * sp.dim())
    throw std::invalid_argument("flattened matrix has wrong length");
  return Mat::from_flat(sp.dim(), sp.dim(), v);
}

// End_Sp as a subspace of the flattened 4n^2-dimensional matrix space;
// dim = n(2n+1). Kernel of A |-> JA - (JA)^T.
inline Subspace end_sp_basis(const SymplecticSpace& sp) {
  std::size_t d = sp.dim();
  std::size_t pairs = d * (d - 1) / 2;
  Mat cond(pairs, d * d);
  std::size_t r = 0;
  // (JA)_{pq} = sum_k J_{pk} A_{kq}; impose (JA)_{pq} - (JA)_{qp} = 0, p < q.
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q, ++r)
      for (std::size_t k = 0; k < d; ++k) {
        cond(r, k * d + q) += sp.j()(p, k);
        cond(r, k * d + p) -= sp.j()(q, k);
      }
  return kernel(cond);
}

inline std::size_t end_sp_dim(const SymplecticSpace& sp) {
  return sp.n() * (2 * sp.n() + 1);
}

// Random element of End_Sp: A = -J S with S symmetric (JA = S).
inline Mat random_end_sp(const SymplecticSpace& sp, Rng& rng, long bound = 3) {
  std::size_t d = sp.dim();
  Mat s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      s(i, j) = rng.small_rational(bound);
      s(j, i) = s(i, j);
    }
  return -(sp.j() * s);
}

// omega-annihilator {v : omega(v, w) = 0 for all w in W}; dim = 2n - dim W.
inline Subspace omega_annihilator(const SymplecticSpace& sp, const Subspace& w) {
  if (w.ambient_dim() != sp.dim())
    throw std::invalid_argument("omega_annihilator: wrong ambient dimension");
  // omega(v, w) = v^T J w = -(w^T J) v, so the conditions are rows w^T J.
  if (w.dim() == 0) return Subspace::full(sp.dim());
  return kernel(w.basis() * sp.j());
}

// --- Sp(2n, Q) generators and seeded random elements ----------------------

inline Mat sp_shear_upper(const SymplecticSpace& sp, const Mat& s) {
  std::size_t n = sp.n();
  Mat g = Mat::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, n + j) = s(i, j);
  return g;
}

inline Mat sp_shear_lower(const SymplecticSpace& sp, const Mat& s) {
  std::size_t n = sp.n();
  Mat g = Mat::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(n + i, j) = s(i, j);
  return g;
}

inline Mat sp_gl_embed(const SymplecticSpace& sp, const Mat& u) {
  std::size_t n = sp.n();
  Mat uti = inverse(u.transpose());
  Mat g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = u(i, j);
      g(n + i, n + j) = uti(i, j);
    }
  return g;
}

// Product of num_factors random generators [[I,S],[0,I]], [[I,0],[S,I]]
// (S symmetric small-integer) and [[U,0],[0,(U^T)^-1]] (U unimodular).
// Satisfies P^T J P = J; deterministic per seed.
inline Mat random_sp(const SymplecticSpace& sp, Rng& rng, std::size_t num_factors = 6,
                     long bound = 3) {
  if (num_factors < 1) throw std::invalid_argument("random_sp: num_factors must be >= 1");
  std::size_t n = sp.n();
  Mat p = Mat::identity(2 * n);
  for (std::size_t f = 0; f < num_factors; ++f) {
    long kind = rng.uniform(0, 2);
    if (kind < 2) {
      Mat s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          s(i, j) = rng.small_rational(bound);
          s(j, i) = s(i, j);
        }
      p = p * (kind == 0 ? sp_shear_upper(sp, s) : sp_shear_lower(sp, s));
    } else {
      // unimodular U = (unit lower) * (unit upper), small integer entries
      Mat lo = Mat::identity(n), up = Mat::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          lo(i, j) = rng.small_rational(bound);
          up(j, i) = rng.small_rational(bound);
        }
      p = p * sp_gl_embed(sp, lo * up);
    }
  }
  return p;
}

inline Mat random_sp(const SymplecticSpace& sp, std::uint64_t seed,
                     std::size_t num_factors = 6, long bound = 3) {
  Rng rng(seed);
  return random_sp(sp, rng, num_factors, bound);
}

// --- isotropic flags -------------------------------------------------------

// Full isotropic flag V_1 c ... c V_{2n-1}, dim V_i = i, with V_i the
// omega-annihilator of V_{2n-i}. Stores an adapted basis u_1..u_{2n}
// (V_i = <u_1..u_i>) chosen so that e_j := u_{n+1-j} (j <= n),
// e_{n+j} := u_{n+j} is a symplectic basis; the change-of-basis matrix
// returned by symplectic_basis() is therefore in Sp(2n).
class IsotropicFlag {
 public:
  static IsotropicFlag from_subspaces(const SymplecticSpace& sp,
                                      std::vector<Subspace> steps) {
    std::size_t d = sp.dim();
    if (steps.size() != d - 1)
      throw std::invalid_argument("flag: expected 2n-1 subspaces");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].ambient_dim() != d)
        throw std::invalid_argument("flag step " + std::to_string(i + 1) +
                                    ": wrong ambient dimension");
      if (steps[i].dim() != i + 1)
        throw std::invalid_argument("flag step " + std::to_string(i + 1) +
                                    ": dimension is " + std::to_string(steps[i].dim()) +
                                    ", expected " + std::to_string(i + 1));
      if (i > 0 && !steps[i].contains(steps[i - 1]))
        throw std::invalid_argument("flag step " + std::to_string(i + 1) +
                                    ": does not contain step " + std::to_string(i));
    }
    for (std::size_t i = 1; i <= steps.size(); ++i) {
      if (omega_annihilator(sp, steps[d - i - 1]) != steps[i - 1])
        throw std::invalid_argument(
            "flag step " + std::to_string(i) +
            ": is not the omega-annihilator of step " + std::to_string(d - i));
    }
    IsotropicFlag f(sp);
    f.steps_ = std::move(steps);
    f.build_adapted_basis();
    return f;
  }

  // vectors[0..2n-1] adapted to the flag: V_i = span(vectors[0..i-1]).
  static IsotropicFlag from_adapted_basis(const SymplecticSpace& sp,
                                          const std::vector<Vec>& vectors) {
    if (vectors.size() != sp.dim())
      throw std::invalid_argument("flag: expected 2n adapted basis vectors");
    std::vector<Subspace> steps;
    std::vector<Vec> prefix;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      prefix.push_back(vectors[i]);
      Subspace s = Subspace::span_of_vectors(sp.dim(), prefix);
      if (s.dim() != i + 1)
        throw std::invalid_argument("flag step " + std::to_string(i + 1) +
                                    ": adapted basis vectors are dependent");
      if (i + 1 < vectors.size()) steps.push_back(std::move(s));
    }
    return from_subspaces(sp, std::move(steps));
  }

  const SymplecticSpace& space() const { return space_; }
  const std::vector<Subspace>& steps() const { return steps_; }

  // V_i with boundary conventions V_0 = 0 and V_{>=2n} = Q^{2n}.
  Subspace step(long i) const {
    if (i <= 0) return Subspace::zero(space_.dim());
    if (i >= static_cast<long>(space_.dim())) return Subspace::full(space_.dim());
    return steps_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<Vec>& adapted_basis() const { return adapted_; }

  // Columns e_1..e_{2n} of the associated symplectic basis; a member of Sp.
  Mat symplectic_basis() const {
    std::size_t n = space_.n(), d = space_.dim();
    Mat p(d, d);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < d; ++i) p(i, j) = adapted_[n - 1 - j][i];
    for (std::size_t j = n; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) p(i, j) = adapted_[j][i];
    return p;
  }

  bool operator==(const IsotropicFlag& o) const { return steps_ == o.steps_; }

 private:
  explicit IsotropicFlag(const SymplecticSpace& sp) : space_(sp) {}

  // Symplectic Gram-Schmidt down the flag. The Lagrangian half is any adapted
  // chain; the second half is corrected so omega(e_i, e_{n+j}) = delta_ij and
  // omega(e_{n+i}, e_{n+j}) = 0. Duality of the flag guarantees the needed
  // pairings are nonzero.
  void build_adapted_basis() {
    std::size_t n = space_.n(), d = space_.dim();
    adapted_.clear();
    for (std::size_t i = 1; i <= d; ++i) {
      Subspace cur = step(static_cast<long>(i));
      Subspace prev = step(static_cast<long>(i) - 1);
      bool found = false;
      for (std::size_t r = 0; r < cur.dim() && !found; ++r) {
        Vec cand = cur.basis_vector(r);
        if (!prev.contains(cand)) {
          adapted_.push_back(std::move(cand));
          found = true;
        }
      }
      if (!found) throw std::logic_error("flag: no vector extends step");
    }
    // e_j = adapted_[n-j] for j=1..n; fix up the dual half in place.
    auto e = [&](std::size_t j) -> Vec& {  // 1-based symplectic label
      return j <= n ? adapted_[n - j] : adapted_[j - 1];
    };
    for (std::size_t j = 1; j <= n; ++j) {
      Vec v = e(n + j);
      Rational c = space_.omega(e(j), v);
      if (c == 0) throw std::logic_error("flag: degenerate pairing while adapting basis");
      for (auto& x : v) x /= c;
      for (std::size_t i = 1; i < j; ++i) {
        Rational ci = space_.omega(e(i), v);
        if (ci == 0) continue;
        for (std::size_t t = 0; t < d; ++t) v[t] -= ci * e(n + i)[t];
      }
      for (std::size_t i = 1; i < j; ++i) {
        Rational di = space_.omega(e(n + i), v);
        if (di == 0) continue;
        for (std::size_t t = 0; t < d; ++t) v[t] += di * e(i)[t];
      }
      e(n + j) = std::move(v);
    }
  }

  SymplecticSpace space_;
  std::vector<Subspace> steps_;
  std::vector<Vec> adapted_;
};

// The flag <e_n> c <e_{n-1}, e_n> c ... c <e_1..e_{2n-1}>.
inline IsotropicFlag standard_flag(const SymplecticSpace& sp) {
  std::size_t n = sp.n(), d = sp.dim();
  std::vector<Vec> vectors;
  auto unit = [&](std::size_t k) {
    Vec v(d);
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) vectors.push_back(unit(n - 1 - i));
  for (std::size_t i = n; i < d; ++i) vectors.push_back(unit(i));
  return IsotropicFlag::from_adapted_basis(sp, vectors);
}

inline IsotropicFlag flag_from_adapted_basis(const SymplecticSpace& sp,
                                             const std::vector<Vec>& vectors) {
  return IsotropicFlag::from_adapted_basis(sp, vectors);
}

// V_i |-> P V_i for P in Sp.
inline IsotropicFlag transport_flag(const SymplecticSpace& sp, const Mat& p,
                                    const IsotropicFlag& f) {
  auto c = gp_multiplier(sp, p);
  if (!c || *c != 1)
    throw std::invalid_argument("transport_flag: P is not symplectic");
  std::vector<Vec> vectors;
  for (const auto& u : f.adapted_basis()) vectors.push_back(p.apply(u));
  return IsotropicFlag::from_adapted_basis(sp, vectors);
}

}  // namespace sympcone

#endif
