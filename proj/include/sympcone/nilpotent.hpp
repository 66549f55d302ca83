#ifndef SYMPCONE_NILPOTENT_HPP
#define SYMPCONE_NILPOTENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "symplectic.hpp"

namespace sympcone {

struct NoSmoothPointError : std::runtime_error {
  std::size_t draws;
  explicit NoSmoothPointError(std::size_t d)
      : std::runtime_error("no smooth point found in L within the draw budget (" +
                           std::to_string(d) + " draws); L ∩ N^sm nonempty was assumed"),
        draws(d) {}
};

struct NotAFlagSubspaceError : std::runtime_error {
  explicit NotAFlagSubspaceError(const std::string& reason)
      : std::runtime_error("L is not a flag subspace U_F: " + reason) {}
};

struct BudgetExhaustedError : std::runtime_error {
  explicit BudgetExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

// Membership in the symplectic nilpotent cone: tr(A^{2r}) = 0 for r = 1..n,
// which for End_Sp elements is equivalent to A^{2n} = 0.
inline bool in_cone(const SymplecticSpace& sp, const Mat& a) {
  if (!is_end_sp(sp, a))
    throw std::invalid_argument("in_cone: matrix is not symmetric-symplectic");
  Mat p = a;
  for (std::size_t r = 1; r <= sp.n(); ++r) {
    p = p * a;  // p = a^{2r} after this step
    if (p.trace() != 0) return false;
    p = p * a;
  }
  return true;
}

// A validated cone point: symmetric-symplectic and nilpotent.
struct ConePoint {
  SymplecticSpace space;
  Mat a;
};

inline ConePoint make_cone_point(const SymplecticSpace& sp, const Mat& a) {
  if (!in_cone(sp, a)) throw std::invalid_argument("cone point: matrix is not nilpotent");
  return ConePoint{sp, a};
}

// Smooth locus of the cone: rank exactly 2n-1.
inline bool is_smooth_point(const ConePoint& p) {
  return rank(p.a) == p.space.dim() - 1;
}

// Tangent space {B in End_Sp : tr(A^{2r-1} B) = 0, r = 1..n} as a subspace of
// flattened matrices. Its codimension in End_Sp is n exactly at smooth points.
inline Subspace tangent_space(const ConePoint& p) {
  const SymplecticSpace& sp = p.space;
  std::size_t d = sp.dim();
  Mat cond(sp.n(), d * d);
  Mat pow = p.a;  // A^{2r-1}
  for (std::size_t r = 0; r < sp.n(); ++r) {
    // tr(M B) = sum_{ij} M_{ij} B_{ji}
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cond(r, j * d + i) = pow(i, j);
    if (r + 1 < sp.n()) pow = pow * p.a * p.a;
  }
  return intersect(end_sp_basis(sp), kernel(cond));
}

inline std::size_t tangent_codim(const ConePoint& p) {
  return end_sp_dim(p.space) - tangent_space(p).dim();
}

// Kernel flag 0 c ker A c ker A^2 c ... c ker A^{2n-1} of a smooth cone
// point. Fails with a diagnostic if the kernel dimensions jump.
inline IsotropicFlag extract_flag(const ConePoint& p) {
  const SymplecticSpace& sp = p.space;
  std::vector<Subspace> steps;
  Mat pow = p.a;
  for (std::size_t i = 1; i < sp.dim(); ++i) {
    Subspace k = kernel(pow);
    if (k.dim() != i)
      throw std::invalid_argument("extract_flag: dim ker A^" + std::to_string(i) +
                                  " = " + std::to_string(k.dim()) +
                                  ", point is not smooth");
    steps.push_back(std::move(k));
    pow = pow * p.a;
  }
  return IsotropicFlag::from_subspaces(sp, std::move(steps));
}

// --- the normal form over a flag (fiber of N^sm -> Fl) ---------------------

// Strictly-lower-triangular block A (a_{i+1,i} != 0) and symmetric block B
// (b_{11} != 0); the fiber matrix is [[A, B], [0, -A^T]] in the flag's
// symplectic basis, and its kernel flag is exactly that flag.
struct NormalFormParams {
  Mat a;  // n x n, strictly lower triangular
  Mat b;  // n x n, symmetric
};

inline NormalFormParams random_normal_form_params(const SymplecticSpace& sp, Rng& rng,
                                                  long bound = 3) {
  std::size_t n = sp.n();
  NormalFormParams p{Mat(n, n), Mat(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      p.a(i, j) = (j + 1 == i) ? Rational(rng.nonzero_uniform(-bound, bound))
                               : rng.small_rational(bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      p.b(i, j) = (i == 0 && j == 0) ? Rational(rng.nonzero_uniform(-bound, bound))
                                     : rng.small_rational(bound);
      p.b(j, i) = p.b(i, j);
    }
  return p;
}

inline ConePoint normal_form_fiber(const SymplecticSpace& sp, const IsotropicFlag& f,
                                   const NormalFormParams& params) {
  std::size_t n = sp.n();
  if (params.a.rows() != n || params.a.cols() != n || params.b.rows() != n ||
      params.b.cols() != n)
    throw std::invalid_argument("normal form: parameter blocks must be n x n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (params.a(i, j) != 0)
        throw std::invalid_argument("normal form: A block must be strictly lower triangular");
  if (params.b != params.b.transpose())
    throw std::invalid_argument("normal form: B block must be symmetric");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (params.a(i + 1, i) == 0)
      throw std::invalid_argument("normal form: subdiagonal entry a_" +
                                  std::to_string(i + 2) + "," + std::to_string(i + 1) +
                                  " must be nonzero (point would leave the smooth locus)");
  if (params.b(0, 0) == 0)
    throw std::invalid_argument("normal form: b_11 must be nonzero (point would leave the smooth locus)");

  Mat m0(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m0(i, j) = params.a(i, j);
      m0(i, n + j) = params.b(i, j);
      m0(n + i, n + j) = -params.a(j, i);
    }
  Mat p = f.symplectic_basis();
  return make_cone_point(sp, p * m0 * inverse(p));
}

// Convenient fixed smooth point: all subdiagonal entries and b_11 equal 1.
inline ConePoint regular_nilpotent(const SymplecticSpace& sp) {
  std::size_t n = sp.n();
  NormalFormParams p{Mat(n, n), Mat(n, n)};
  for (std::size_t i = 0; i + 1 < n; ++i) p.a(i + 1, i) = 1;
  p.b(0, 0) = 1;
  return normal_form_fiber(sp, standard_flag(sp), p);
}

// --- U_F and the triple decomposition --------------------------------------

// U_F = {A in End_Sp : A V_i c V_{i-1} for all i}, dim n^2, inside the
// flattened matrix space.
struct FlagSubspace {
  IsotropicFlag flag;
  Subspace subspace;
};

inline Subspace flag_subspace_of(const SymplecticSpace& sp, const IsotropicFlag& f) {
  std::size_t d = sp.dim();
  // One condition block per flag step: A u_i must lie in V_{i-1}. Conditions
  // w^T A u = 0 for w spanning the dot-complement of V_{i-1} flatten to the
  // row vec(w u^T).
  std::vector<Vec> rows;
  for (std::size_t i = 1; i <= d; ++i) {
    const Vec& u = f.adapted_basis()[i - 1];
    Subspace target = f.step(static_cast<long>(i) - 1);
    Subspace comp = target.dot_complement();
    for (std::size_t r = 0; r < comp.dim(); ++r) {
      Vec w = comp.basis_vector(r);
      Vec row(d * d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) row[p * d + q] = w[p] * u[q];
      rows.push_back(std::move(row));
    }
  }
  Mat cond(rows.size(), d * d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d * d; ++j) cond(i, j) = rows[i][j];
  return intersect(end_sp_basis(sp), kernel(cond));
}

inline FlagSubspace flag_subspace(const SymplecticSpace& sp, const IsotropicFlag& f) {
  return FlagSubspace{f, flag_subspace_of(sp, f)};
}

// End_Sp = U + D + U^T with respect to a flag's symplectic basis: U = U_F,
// U^T its transpose in that basis, D the symmetric-symplectic diagonal
// matrices (dims n^2, n, n^2).
struct TriplePart {
  Subspace u, d, ut;
};

inline TriplePart triple_decomposition(const SymplecticSpace& sp, const IsotropicFlag& f) {
  std::size_t n = sp.n(), dd = sp.dim();
  Subspace u = flag_subspace_of(sp, f);
  Mat p = f.symplectic_basis();
  Mat pinv = inverse(p);
  std::vector<Vec> ut_rows;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Mat b = unflatten(sp, u.basis_vector(i));
    Mat bt = p * (pinv * b * p).transpose() * pinv;
    ut_rows.push_back(flatten(bt));
  }
  Subspace ut = Subspace::span_of_vectors(dd * dd, ut_rows);
  std::vector<Vec> d_rows;
  for (std::size_t i = 0; i < n; ++i) {
    Mat diag(dd, dd);
    diag(i, i) = 1;
    diag(n + i, n + i) = -1;  // diag(d, -d) is the symmetric-symplectic diagonal
    d_rows.push_back(flatten(p * diag * pinv));
  }
  Subspace d = Subspace::span_of_vectors(dd * dd, d_rows);
  return TriplePart{std::move(u), std::move(d), std::move(ut)};
}

// tr(B1 B2): symmetric and nondegenerate on End_Sp.
inline Rational trace_pairing(const SymplecticSpace& sp, const Mat& b1, const Mat& b2) {
  sp.require_endo_shape(b1);
  sp.require_endo_shape(b2);
  return (b1 * b2).trace();
}

// Gram matrix of the trace pairing on a basis of End_Sp.
inline Mat trace_pairing_gram(const SymplecticSpace& sp) {
  Subspace es = end_sp_basis(sp);
  Mat g(es.dim(), es.dim());
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < es.dim(); ++i) basis.push_back(unflatten(sp, es.basis_vector(i)));
  for (std::size_t i = 0; i < es.dim(); ++i)
    for (std::size_t j = i; j < es.dim(); ++j) {
      g(i, j) = (basis[i] * basis[j]).trace();
      g(j, i) = g(i, j);
    }
  return g;
}

// q-annihilator of a subspace of flattened matrices, taken inside End_Sp:
// {B in End_Sp : tr(B C) = 0 for all C in W}. tr(B C) = vec(B) . vec(C^T).
inline Subspace q_annihilator_in_end_sp(const SymplecticSpace& sp, const Subspace& w) {
  std::size_t d = sp.dim();
  if (w.dim() == 0) return end_sp_basis(sp);
  Mat cond(w.dim(), d * d);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Mat ct = unflatten(sp, w.basis_vector(i)).transpose();
    Vec f = flatten(ct);
    for (std::size_t j = 0; j < d * d; ++j) cond(i, j) = f[j];
  }
  return intersect(end_sp_basis(sp), kernel(cond));
}

// Minimal r with B V_i c V_{i+r} for all i (V_{<=0} = 0, V_{>=2n} = all).
// r(0) is the sentinel -2n; r < 0 characterizes U_F within nilpotent End_Sp.
inline long filtration_degree(const SymplecticSpace& sp, const IsotropicFlag& f, const Mat& b) {
  sp.require_endo_shape(b);
  long d = static_cast<long>(sp.dim());
  if (b.is_zero()) return -d;
  long r = -d;
  for (long i = 1; i <= d; ++i) {
    Subspace vi = f.step(i);
    std::vector<Vec> image;
    for (std::size_t k = 0; k < vi.dim(); ++k) image.push_back(b.apply(vi.basis_vector(k)));
    long m = 0;
    while (m <= d) {
      Subspace target = f.step(m);
      bool ok = true;
      for (const auto& v : image)
        if (!target.contains(v)) {
          ok = false;
          break;
        }
      if (ok) break;
      ++m;
    }
    if (m - i > r) r = m - i;
  }
  return r;
}

// --- symbolic nilpotency certificate ----------------------------------------

// Rescale a nonzero matrix by a rational so its entries become coprime
// integers; spans and trace-vanishing are unchanged, mpq arithmetic on
// integer values is far cheaper.
inline Mat primitive_integer_scale(const Mat& m) {
  Int l(1);
  for (const auto& c : m.flat())
    if (c != 0) l = lcm(l, denominator(c));
  Int g(0);
  for (const auto& c : m.flat()) {
    if (c == 0) continue;
    g = gcd(g, Int(numerator(c) * (l / denominator(c))));
  }
  if (g == 0) return m;
  return m * make_rational(l, g);
}

// Decides L c N exactly: tr((sum_k lambda_k B_k)^{2r}) must vanish identically
// in the lambda's for r = 1..n. Returns the first r that fails, if any.
inline std::optional<std::size_t> symbolic_nilpotency_violation(
    const SymplecticSpace& sp, const std::vector<Mat>& basis) {
  std::size_t d = sp.dim();
  if (basis.size() > MultiPoly::kMaxVars)
    throw std::invalid_argument("nilpotency certificate: too many basis elements");
  std::vector<MultiPoly> m(d * d);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Mat bk = primitive_integer_scale(basis[k]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (bk(i, j) != 0)
          m[i * d + j].add_in_place(MultiPoly::variable(k, numerator(bk(i, j))));
  }

  auto mul = [d](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    std::vector<MultiPoly> out(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const MultiPoly& x = a[i * d + k];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (!b[k * d + j].is_zero()) out[i * d + j].add_in_place(x * b[k * d + j]);
      }
    return out;
  };
  auto trace_of_product = [d](const std::vector<MultiPoly>& a,
                              const std::vector<MultiPoly>& b) {
    MultiPoly t;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!a[i * d + j].is_zero() && !b[j * d + i].is_zero())
          t.add_in_place(a[i * d + j] * b[j * d + i]);
    return t;
  };

  std::vector<MultiPoly> even = mul(m, m);  // M^2
  MultiPoly tr;
  for (std::size_t i = 0; i < d; ++i) tr.add_in_place(even[i * d + i]);
  if (!tr.is_zero()) return 1;
  for (std::size_t r = 2; r <= sp.n(); ++r) {
    // Powers climb two at a time; the trace of M^{2r} only needs the diagonal.
    if (r < sp.n()) {
      even = mul(even, m);
      even = mul(even, m);
      MultiPoly t;
      for (std::size_t i = 0; i < d; ++i) t.add_in_place(even[i * d + i]);
      if (!t.is_zero()) return r;
    } else {
      std::vector<MultiPoly> m2 = mul(m, m);
      MultiPoly t = trace_of_product(even, m2);
      if (!t.is_zero()) return r;
    }
  }
  return std::nullopt;
}

// --- flag recovery (the self-certifying inverse of flag_subspace) ----------

struct RecoveryResult {
  IsotropicFlag flag;
  Mat smooth_witness;
  std::size_t draws_used = 0;
  bool certified = false;
};

// Given L with dim L = n^2, L c N and L meeting the smooth locus, finds the
// unique flag F with L = U_F: hunt for a smooth point by seeded random
// small-integer combinations, read the flag off its kernels, then certify by
// checking L = U_F exactly. Guessing is randomized, the output never is.
inline RecoveryResult recover_flag(const SymplecticSpace& sp, const Subspace& l,
                                   std::uint64_t seed = 0,
                                   std::size_t budget = 10000) {
  std::size_t n = sp.n(), d = sp.dim();
  if (l.ambient_dim() != d * d)
    throw std::invalid_argument("recover_flag: wrong ambient dimension");
  if (l.dim() != n * n)
    throw NotAFlagSubspaceError("dim L = " + std::to_string(l.dim()) + ", expected n^2 = " +
                                std::to_string(n * n));
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Mat b = unflatten(sp, l.basis_vector(i));
    if (!is_end_sp(sp, b))
      throw NotAFlagSubspaceError("basis element " + std::to_string(i) +
                                  " is not symmetric-symplectic");
    basis.push_back(std::move(b));
  }
  if (auto r = symbolic_nilpotency_violation(sp, basis))
    throw NotAFlagSubspaceError("L is not contained in the nilpotent cone: tr(A^" +
                                std::to_string(2 * *r) + ") does not vanish identically on L");

  Rng rng(seed);
  std::optional<Mat> witness;
  std::size_t draws = 0;
  for (; draws < budget; ++draws) {
    Mat cand(d, d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      long c = rng.uniform(-3, 3);
      if (c != 0) cand = cand + basis[k] * Rational(c);
    }
    if (rank(cand) == d - 1) {
      witness = std::move(cand);
      ++draws;
      break;
    }
  }
  if (!witness) throw NoSmoothPointError(budget);

  IsotropicFlag flag = extract_flag(ConePoint{sp, *witness});
  if (flag_subspace_of(sp, flag) != l)
    throw NotAFlagSubspaceError(
        "verification failed: U_F of the recovered flag differs from L");
  return RecoveryResult{std::move(flag), std::move(*witness), draws, true};
}

// --- the proof-step identities, as a checkable report ----------------------

struct StepIdentityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks, on the basis of L and seeded random pairs (A, B) from L:
//   tr(A^i B) = 0 for i = 0..2n;  A^{2i-1} in L;  A^2 B + B A^2 + A B A in L.
inline StepIdentityReport check_step_identities(const SymplecticSpace& sp, const Subspace& l,
                                                std::uint64_t seed = 0,
                                                std::size_t random_pairs = 20) {
  StepIdentityReport report;
  std::size_t d = sp.dim();
  // The identities are invariant under rescaling A and B, so everything is
  // checked on primitive integer representatives; this keeps the matrix
  // powers cheap.
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < l.dim(); ++i)
    basis.push_back(primitive_integer_scale(unflatten(sp, l.basis_vector(i))));

  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) pairs.emplace_back(basis[i], basis[j]);
  Rng rng(seed);
  for (std::size_t k = 0; k < random_pairs; ++k) {
    Mat a(d, d), b(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      a = a + basis[i] * Rational(rng.uniform(-3, 3));
      b = b + basis[i] * Rational(rng.uniform(-3, 3));
    }
    pairs.emplace_back(primitive_integer_scale(a), primitive_integer_scale(b));
  }

  std::size_t idx = 0;
  for (const auto& [a, b] : pairs) {
    Mat pow = Mat::identity(d);
    for (std::size_t i = 0; i <= d; ++i) {
      if ((pow * b).trace() != 0) {
        report.violations.push_back("step 1: tr(A^" + std::to_string(i) +
                                    " B) != 0 for pair " + std::to_string(idx));
        break;
      }
      pow = pow * a;
    }
    Mat apow = a;
    for (std::size_t i = 1; i <= sp.n(); ++i) {
      if (!l.contains(flatten(apow))) {
        report.violations.push_back("step 3: A^" + std::to_string(2 * i - 1) +
                                    " not in L for pair " + std::to_string(idx));
        break;
      }
      if (i < sp.n()) apow = apow * a * a;
    }
    Mat mixed = a * a * b + b * a * a + a * b * a;
    if (!l.contains(flatten(mixed)))
      report.violations.push_back("step 4: A^2 B + B A^2 + A B A not in L for pair " +
                                  std::to_string(idx));
    ++idx;
  }
  return report;
}

// --- perturbation nondegeneracy (the det(A + C) fact) ----------------------

// For nonzero A in End_Sp, finds singular C in End_Sp with det(A + C) != 0;
// for A = 0 returns nullopt (no witness exists: det(0 + C) = det C = 0).
inline std::optional<Mat> perturbation_nondegeneracy(const SymplecticSpace& sp, const Mat& a,
                                                     std::size_t budget = 1000,
                                                     std::uint64_t seed = 0) {
  if (!is_end_sp(sp, a))
    throw std::invalid_argument("perturbation_nondegeneracy: matrix is not symmetric-symplectic");
  if (a.is_zero()) return std::nullopt;
  std::size_t d = sp.dim();
  if (determinant(a) != 0) return Mat(d, d);  // C = 0 is singular and works
  Rng rng(seed);
  for (std::size_t t = 0; t < budget; ++t) {
    // Sum of up to 2n-1 rank-one blocks w (Jw)^T, each in End_Sp and the sum
    // of rank < 2n, hence singular.
    std::size_t terms = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(d - 1)));
    Mat c(d, d);
    for (std::size_t k = 0; k < terms; ++k) {
      Vec w(d);
      for (auto& x : w) x = rng.small_rational(5);
      Vec jw = sp.j().apply(w);
      Rational s(rng.nonzero_uniform(-2, 2));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c(i, j) += s * w[i] * jw[j];
    }
    if (determinant(c) != 0) continue;
    if (determinant(a + c) != 0) {
      if (!is_end_sp(sp, c)) throw std::logic_error("perturbation witness left End_Sp");
      return c;
    }
  }
  throw BudgetExhaustedError(
      "perturbation_nondegeneracy: no witness found within budget (search failure, not A = 0)");
}

}  // namespace sympcone

#endif
