#ifndef SYMPCONE_SUITES_HPP
#define SYMPCONE_SUITES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nilpotent.hpp"
#include "spectral.hpp"

namespace sympcone {

// Named property suites. Each one verifies an algebraic identity of the
// library on seeded samples with exact arithmetic (tolerance zero) and
// reports every violating sample as a witness string. The CLI exposes them
// via `suite`, and the acceptance binary runs them at pinned parameters.
struct SuiteResult {
  std::string suite;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteSpec {
  std::string name;
  std::size_t default_samples;
  std::function<SuiteResult(std::size_t n, std::uint64_t seed, std::size_t samples,
                            std::size_t budget)>
      run;
};

namespace suites_detail {

inline ConePoint random_smooth_cone_point(const SymplecticSpace& sp, Rng& rng) {
  ConePoint nf = normal_form_fiber(sp, standard_flag(sp), random_normal_form_params(sp, rng));
  Mat p = random_sp(sp, rng);
  return ConePoint{sp, p * nf.a * inverse(p)};
}

inline std::string witness(std::size_t i, const std::string& what) {
  return "sample " + std::to_string(i) + ": " + what;
}

// Laplace-expansion determinant: the independent route used against the
// Faddeev-LeVerrier characteristic polynomial.
template <class T>
T laplace_determinant(const Matrix<T>& m, std::vector<std::size_t> cols = {}) {
  if (cols.empty())
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  std::size_t row = m.rows() - cols.size();
  if (cols.size() == 1) return m(row, cols[0]);
  T acc{};
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m(row, cols[k]) == T()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    T term = m(row, cols[k]) * laplace_determinant(m, rest);
    if (k % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

}  // namespace suites_detail

// 1. Nilpotency equivalence: in_cone (the n trace equations) agrees with the
// A^{2n} = 0 oracle on conjugated normal forms and on random End_Sp elements.
inline SuiteResult suite_nilpotency_equivalence(std::size_t n, std::uint64_t seed,
                                                std::size_t samples, std::size_t) {
  SuiteResult res{"nilpotency-equivalence", n, samples, {}};
  SymplecticSpace sp(n);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    ConePoint cp = suites_detail::random_smooth_cone_point(sp, rng);
    bool cone = in_cone(sp, cp.a);
    bool oracle = cp.a.pow(2 * n).is_zero();
    if (cone != oracle || !cone)
      res.failures.push_back(suites_detail::witness(i, "conjugated normal form: in_cone=" +
                                                           std::to_string(cone) +
                                                           " oracle=" + std::to_string(oracle)));
    Mat b = random_end_sp(sp, rng);
    if (in_cone(sp, b) != b.pow(2 * n).is_zero())
      res.failures.push_back(
          suites_detail::witness(i, "random End_Sp element: trace test disagrees with A^{2n}=0"));
  }
  return res;
}

// 2. Dimension bookkeeping: dim End_Sp = n(2n+1); tangent codimension n at
// smooth points, < n at non-regular cone points (0, and A^3 for regular A).
inline SuiteResult suite_dimension_bookkeeping(std::size_t n, std::uint64_t seed,
                                               std::size_t samples, std::size_t) {
  SuiteResult res{"dimension-bookkeeping", n, samples, {}};
  SymplecticSpace sp(n);
  if (end_sp_basis(sp).dim() != end_sp_dim(sp))
    res.failures.push_back("dim End_Sp != n(2n+1)");
  ConePoint reg = regular_nilpotent(sp);
  if (tangent_codim(reg) != n)
    res.failures.push_back("tangent codim at the regular nilpotent is not n");
  ConePoint origin{sp, Mat(2 * n, 2 * n)};
  if (tangent_codim(origin) >= n)
    res.failures.push_back("tangent codim at 0 is not < n");
  if (n >= 2) {
    Mat a3 = reg.a * reg.a * reg.a;
    ConePoint cp = make_cone_point(sp, a3);
    if (is_smooth_point(cp)) res.failures.push_back("A^3 of a regular nilpotent looks smooth");
    if (tangent_codim(cp) >= n)
      res.failures.push_back("tangent codim at the non-regular nilpotent A^3 is not < n");
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    ConePoint cp = suites_detail::random_smooth_cone_point(sp, rng);
    if (tangent_codim(cp) != n)
      res.failures.push_back(suites_detail::witness(i, "tangent codim != n at a smooth point"));
  }
  return res;
}

// 3. Flag structure: dim ker A^i = i, omega-duality ker A^i <-> ker A^{2n-i},
// ker A^n Lagrangian, for seeded smooth cone points.
inline SuiteResult suite_flag_structure(std::size_t n, std::uint64_t seed,
                                        std::size_t samples, std::size_t) {
  SuiteResult res{"flag-structure", n, samples, {}};
  SymplecticSpace sp(n);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    ConePoint cp = suites_detail::random_smooth_cone_point(sp, rng);
    std::vector<Subspace> ker_pows;
    Mat pow = cp.a;
    bool bad = false;
    for (std::size_t k = 1; k < 2 * n; ++k) {
      Subspace ker_k = kernel(pow);
      if (ker_k.dim() != k) {
        res.failures.push_back(
            suites_detail::witness(i, "dim ker A^" + std::to_string(k) + " != " + std::to_string(k)));
        bad = true;
        break;
      }
      ker_pows.push_back(std::move(ker_k));
      pow = pow * cp.a;
    }
    if (bad) continue;
    for (std::size_t k = 1; k < 2 * n; ++k)
      if (omega_annihilator(sp, ker_pows[k - 1]) != ker_pows[2 * n - k - 1]) {
        res.failures.push_back(suites_detail::witness(
            i, "ker A^" + std::to_string(k) + " is not omega-dual to ker A^" +
                   std::to_string(2 * n - k)));
        break;
      }
    if (omega_annihilator(sp, ker_pows[n - 1]) != ker_pows[n - 1])
      res.failures.push_back(suites_detail::witness(i, "ker A^n is not Lagrangian"));
  }
  return res;
}

// 4. Normal-form fiber: n parameters are constrained nonzero, n^2 - n free,
// and extract_flag o normal_form_fiber is the identity on flags.
inline SuiteResult suite_normal_form_fiber(std::size_t n, std::uint64_t seed,
                                           std::size_t samples, std::size_t) {
  SuiteResult res{"normal-form-fiber", n, samples, {}};
  SymplecticSpace sp(n);
  IsotropicFlag std_flag = standard_flag(sp);
  Rng rng0(mix_seed(seed, ~std::uint64_t{0}));

  std::size_t total_slots = n * (n - 1) / 2 + n * (n + 1) / 2;
  if (total_slots != n * n) res.failures.push_back("parameter slot count is not n^2");
  std::size_t constrained = (n - 1) + 1;
  if (constrained != n) res.failures.push_back("constrained slot count is not n");
  // zeroing any constrained slot must be rejected
  for (std::size_t k = 0; k < n; ++k) {
    NormalFormParams p = random_normal_form_params(sp, rng0);
    if (k + 1 < n)
      p.a(k + 1, k) = 0;
    else
      p.b(0, 0) = 0;
    bool rejected = false;
    try {
      normal_form_fiber(sp, std_flag, p);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    if (!rejected)
      res.failures.push_back("constrained parameter " + std::to_string(k) +
                             " = 0 was not rejected");
  }
  // all free slots zero is a valid smooth point
  {
    NormalFormParams p{Mat(n, n), Mat(n, n)};
    for (std::size_t i = 0; i + 1 < n; ++i) p.a(i + 1, i) = 1;
    p.b(0, 0) = 1;
    ConePoint cp = normal_form_fiber(sp, std_flag, p);
    if (!is_smooth_point(cp))
      res.failures.push_back("normal form with all free parameters zero is not smooth");
  }

  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    IsotropicFlag f = transport_flag(sp, random_sp(sp, rng), std_flag);
    NormalFormParams p = random_normal_form_params(sp, rng);
    ConePoint cp = normal_form_fiber(sp, f, p);
    if (!(extract_flag(cp) == f))
      res.failures.push_back(suites_detail::witness(i, "extract_flag(normal_form_fiber(F,p)) != F"));
  }
  return res;
}

// 5. Flag recovery: L = P U_F P^{-1} recovers exactly transport_flag(P, F),
// certified.
inline SuiteResult suite_flag_recovery(std::size_t n, std::uint64_t seed,
                                       std::size_t samples, std::size_t budget) {
  SuiteResult res{"flag-recovery", n, samples, {}};
  SymplecticSpace sp(n);
  IsotropicFlag std_flag = standard_flag(sp);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    IsotropicFlag f = transport_flag(sp, random_sp(sp, rng), std_flag);
    Mat p = random_sp(sp, rng);
    Mat pinv = inverse(p);
    Subspace u = flag_subspace_of(sp, f);
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < u.dim(); ++k)
      rows.push_back(flatten(p * unflatten(sp, u.basis_vector(k)) * pinv));
    Subspace l = Subspace::span_of_vectors(4 * n * n, rows);
    try {
      RecoveryResult rec = recover_flag(sp, l, mix_seed(seed, i) ^ 0x5eedULL, budget);
      if (!rec.certified)
        res.failures.push_back(suites_detail::witness(i, "recovery not certified"));
      else if (!(rec.flag == transport_flag(sp, p, f)))
        res.failures.push_back(suites_detail::witness(i, "recovered flag != transported flag"));
    } catch (const std::exception& e) {
      res.failures.push_back(suites_detail::witness(i, std::string("recover_flag threw: ") + e.what()));
    }
  }
  return res;
}

// 6. Step identities on recovered subspaces: tr(A^i B) = 0 (i <= 2n),
// A^{2i-1} in L, A^2B + BA^2 + ABA in L.
inline SuiteResult suite_step_identities(std::size_t n, std::uint64_t seed,
                                         std::size_t samples, std::size_t) {
  SuiteResult res{"step-identities", n, samples, {}};
  SymplecticSpace sp(n);
  IsotropicFlag std_flag = standard_flag(sp);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    IsotropicFlag f = transport_flag(sp, random_sp(sp, rng), std_flag);
    Mat p = random_sp(sp, rng);
    Mat pinv = inverse(p);
    Subspace u = flag_subspace_of(sp, f);
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < u.dim(); ++k)
      rows.push_back(flatten(p * unflatten(sp, u.basis_vector(k)) * pinv));
    Subspace l = Subspace::span_of_vectors(4 * n * n, rows);
    StepIdentityReport rep = check_step_identities(sp, l, mix_seed(seed, i), 20);
    if (!rep.ok())
      res.failures.push_back(suites_detail::witness(i, rep.violations.front()));
  }
  return res;
}

// 7. Trace-pairing duality: nondegenerate Gram, q-annihilator of U is U + D,
// End_Sp = U + D + U^T with dims (n^2, n, n^2).
inline SuiteResult suite_trace_pairing_duality(std::size_t n, std::uint64_t seed,
                                               std::size_t samples, std::size_t) {
  SuiteResult res{"trace-pairing-duality", n, samples, {}};
  SymplecticSpace sp(n);
  if (determinant(trace_pairing_gram(sp)) == 0)
    res.failures.push_back("Gram determinant of the trace pairing vanishes");
  IsotropicFlag std_flag = standard_flag(sp);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    IsotropicFlag f =
        i == 0 ? std_flag : transport_flag(sp, random_sp(sp, rng), std_flag);
    TriplePart t = triple_decomposition(sp, f);
    if (t.u.dim() != n * n || t.d.dim() != n || t.ut.dim() != n * n) {
      res.failures.push_back(suites_detail::witness(i, "triple dims are not (n^2, n, n^2)"));
      continue;
    }
    if (intersect(t.u, t.d).dim() != 0 || intersect(t.u, t.ut).dim() != 0 ||
        intersect(t.d, t.ut).dim() != 0)
      res.failures.push_back(suites_detail::witness(i, "triple summands overlap"));
    if (!(sum(sum(t.u, t.d), t.ut) == end_sp_basis(sp)))
      res.failures.push_back(suites_detail::witness(i, "U + D + U^T != End_Sp"));
    if (!(q_annihilator_in_end_sp(sp, t.u) == sum(t.u, t.d)))
      res.failures.push_back(suites_detail::witness(i, "q-annihilator of U != U + D"));
    for (std::size_t k = 0; k < t.u.dim(); ++k)
      if (!in_cone(sp, unflatten(sp, t.u.basis_vector(k)))) {
        res.failures.push_back(suites_detail::witness(i, "U_F basis element not nilpotent"));
        break;
      }
  }
  return res;
}

// 8. Group identities: q is multiplicative and det A = q(A)^n on seeded Gp
// elements built as scalar * Sp products.
inline SuiteResult suite_group_identities(std::size_t n, std::uint64_t seed,
                                          std::size_t samples, std::size_t) {
  SuiteResult res{"group-identities", n, samples, {}};
  SymplecticSpace sp(n);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    Rational t(rng.nonzero_uniform(-5, 5));
    Rational u(rng.nonzero_uniform(-5, 5));
    Mat a = random_sp(sp, rng) * t;
    Mat b = random_sp(sp, rng) * u;
    auto qa = gp_multiplier(sp, a), qb = gp_multiplier(sp, b), qab = gp_multiplier(sp, a * b);
    if (!qa || !qb || !qab) {
      res.failures.push_back(suites_detail::witness(i, "scalar * Sp product not recognized in Gp"));
      continue;
    }
    if (*qa != t * t)
      res.failures.push_back(suites_detail::witness(i, "q(tP) != t^2"));
    if (*qab != *qa * *qb)
      res.failures.push_back(suites_detail::witness(i, "q(AB) != q(A) q(B)"));
    if (!check_det_identity(sp, a) || !check_det_identity(sp, b) || !check_det_identity(sp, a * b))
      res.failures.push_back(suites_detail::witness(i, "det A != q(A)^n"));
  }
  return res;
}

// 9. Hitchin consistency: the spectral-curve identity det(yI - theta) =
// y^{2n} + sum s_{2k} y^{2n-2k} against a Laplace determinant, vanishing odd
// coefficients, and the C*-law at lambda in {2, -1, 1/3}.
inline SuiteResult suite_hitchin_consistency(std::size_t n, std::uint64_t seed,
                                             std::size_t samples, std::size_t) {
  SuiteResult res{"hitchin-consistency", n, samples, {}};
  SymplecticSpace sp(n);
  const std::vector<Rational> lambdas{Rational(2), Rational(-1), Rational(1) / 3};
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    PolyHiggs theta = random_poly_higgs(sp, rng, 4);
    SpectralData sd = hitchin(theta);
    Polynomial<PolyRat> curve = spectral_curve(sd);
    // independent route: Laplace expansion of det(yI - theta) over Q[x][y]
    Matrix<Polynomial<PolyRat>> ymt(sp.dim(), sp.dim());
    for (std::size_t r = 0; r < sp.dim(); ++r)
      for (std::size_t c = 0; c < sp.dim(); ++c) {
        std::vector<PolyRat> co{-theta.entries(r, c)};
        if (r == c) co.push_back(PolyRat(Rational(1)));
        ymt(r, c) = Polynomial<PolyRat>::from_coeffs(std::move(co));
      }
    Polynomial<PolyRat> det = suites_detail::laplace_determinant(ymt);
    if (!(det == curve)) {
      res.failures.push_back(
          suites_detail::witness(i, "det(yI - theta) != spectral curve of hitchin(theta)"));
      continue;
    }
    for (std::size_t k = 1; k < 2 * sp.dim(); k += 2)
      if (!det.coeff(k).is_zero()) {
        res.failures.push_back(suites_detail::witness(i, "odd y-coefficient does not vanish"));
        break;
      }
    for (const auto& lam : lambdas)
      if (!(hitchin(scale_higgs(theta, lam)).s == cstar_scale(sd, lam).s)) {
        res.failures.push_back(suites_detail::witness(
            i, "hitchin(lambda theta) != lambda-weighted hitchin(theta) at lambda=" +
                   to_string(lam)));
        break;
      }
  }
  return res;
}

// 10. Discriminant classifier: the four fixtures classify as stated, and a
// Smooth verdict implies squarefree fibers P(x0, y) at seeded rational x0.
inline SuiteResult suite_discriminant_classifier(std::size_t n, std::uint64_t seed,
                                                 std::size_t samples, std::size_t) {
  SuiteResult res{"discriminant-classifier", n, samples, {}};
  using K = DiscriminantClass::Kind;
  PolyRat x = PolyRat::variable();

  auto expect = [&res](const char* name, const SpectralData& sd, K kind) {
    DiscriminantClass c = classify_discriminant(sd);
    if (c.kind != kind)
      res.failures.push_back(std::string("fixture ") + name + ": classified as " +
                             to_string(c.kind));
  };
  expect("D1", make_spectral_data(1, {x * x}), K::D1);
  expect("Smooth", make_spectral_data(2, {x.scaled(-2), x * x - PolyRat(Rational(1))}),
         K::Smooth);
  expect("D2", make_spectral_data(2, {PolyRat(Rational(-2)), PolyRat(Rational(1)) - x * x}),
         K::D2);
  expect("Both", make_spectral_data(2, {x.scaled(-2), x * x}), K::Both);

  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    std::vector<PolyRat> s;
    for (std::size_t k = 1; k <= 2; ++k) {
      std::vector<Rational> cs(2 * k + 1);
      for (auto& c : cs) c = rng.small_rational(4);
      s.push_back(PolyRat::from_coeffs(std::move(cs)));
    }
    if (s[1].is_zero()) s[1] = PolyRat(Rational(1));
    SpectralData sd = make_spectral_data(2, s);
    DiscriminantClass c = classify_discriminant(sd);
    if (c.kind != K::Smooth) continue;
    Polynomial<PolyRat> curve = spectral_curve(sd);
    for (std::size_t t = 0; t < 10; ++t) {
      Rational x0 = make_rational(Int(rng.uniform(-1000000, 1000000)),
                                  Int(rng.uniform(1, 1000)));
      PolyRat fiber = evaluate_x(curve, x0);
      if (poly_gcd(fiber, fiber.derivative()).degree() != 0) {
        res.failures.push_back(suites_detail::witness(
            i, "Smooth verdict but P(x0, y) not squarefree at x0 = " + to_string(x0)));
        break;
      }
    }
  }
  return res;
}

// 11. Perturbation nondegeneracy: a witness C (singular, in End_Sp, with
// det(A + C) != 0) is found for every nonzero A; A = 0 returns Zero.
inline SuiteResult suite_perturbation_nondegeneracy(std::size_t n, std::uint64_t seed,
                                                    std::size_t samples,
                                                    std::size_t budget) {
  SuiteResult res{"perturbation-nondegeneracy", n, samples, {}};
  SymplecticSpace sp(n);
  if (perturbation_nondegeneracy(sp, Mat(2 * n, 2 * n), budget, seed).has_value())
    res.failures.push_back("A = 0 did not return Zero");
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    Mat a = random_end_sp(sp, rng);
    while (a.is_zero()) a = random_end_sp(sp, rng);
    try {
      auto w = perturbation_nondegeneracy(sp, a, budget, mix_seed(seed, i));
      if (!w) {
        res.failures.push_back(suites_detail::witness(i, "nonzero A reported as Zero"));
        continue;
      }
      if (!is_end_sp(sp, *w) || determinant(*w) != 0 || determinant(a + *w) == 0)
        res.failures.push_back(suites_detail::witness(i, "witness fails its defining inequalities"));
    } catch (const BudgetExhaustedError&) {
      res.failures.push_back(suites_detail::witness(i, "budget exhausted"));
    }
  }
  return res;
}

// 12. Vanishing subspaces: codim m law with derivative-vanishing and
// membership oracles; trace surjectivity for full spans and the
// single-nilpotent counterexample.
inline SuiteResult suite_vanishing_subspaces(std::size_t n, std::uint64_t seed,
                                             std::size_t samples, std::size_t) {
  SuiteResult res{"vanishing-subspaces", n, samples, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, i));
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 12));
    std::size_t m = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d) + 1));
    Rational x0 = make_rational(Int(rng.uniform(-50, 50)), Int(rng.uniform(1, 9)));
    Subspace v = vanishing_subspace(d, x0, m);
    if (v.dim() != d + 1 - m) {
      res.failures.push_back(suites_detail::witness(i, "codim != m"));
      continue;
    }
    bool bad = false;
    for (std::size_t r = 0; r < v.dim() && !bad; ++r) {
      PolyRat p = PolyRat::from_coeffs(v.basis_vector(r));
      for (std::size_t j = 0; j < m; ++j) {
        if (p.evaluate(x0) != 0) {
          res.failures.push_back(
              suites_detail::witness(i, "basis polynomial does not vanish to order m"));
          bad = true;
          break;
        }
        p = p.derivative();
      }
    }
    // (x - x0)^m x^t are members for t <= d - m
    PolyRat shift = PolyRat{-x0, Rational(1)};
    PolyRat mem(Rational(1));
    for (std::size_t j = 0; j < m; ++j) mem = mem * shift;
    for (std::size_t t = 0; t + m <= d; t += std::max<std::size_t>(1, (d - m) / 2 + 1)) {
      PolyRat q = mem.shifted(t);
      Vec coeffs(d + 1);
      for (std::size_t j = 0; j <= d; ++j) coeffs[j] = q.coeff(j);
      if (!v.contains(coeffs)) {
        res.failures.push_back(suites_detail::witness(i, "(x-x0)^m x^t not contained"));
        break;
      }
    }
  }

  auto full_span = [](const SymplecticSpace& sp) {
    std::vector<Mat> v;
    Subspace es = end_sp_basis(sp);
    for (std::size_t k = 0; k < es.dim(); ++k) v.push_back(unflatten(sp, es.basis_vector(k)));
    return v;
  };
  for (auto [nn, kk] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {2, 2}}) {
    SymplecticSpace sp(nn);
    if (!trace_surjectivity_check(sp, full_span(sp), kk))
      res.failures.push_back("trace surjectivity false for full span at (n,k)=(" +
                             std::to_string(nn) + "," + std::to_string(kk) + ")");
  }
  {
    SymplecticSpace sp1(1);
    std::vector<Mat> single{Mat{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}};
    if (trace_surjectivity_check(sp1, single, 1))
      res.failures.push_back("trace surjectivity true for a single nilpotent");
  }
  return res;
}

inline const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> reg = {
      {"nilpotency-equivalence", 500, suite_nilpotency_equivalence},
      {"dimension-bookkeeping", 10, suite_dimension_bookkeeping},
      {"flag-structure", 200, suite_flag_structure},
      {"normal-form-fiber", 100, suite_normal_form_fiber},
      {"flag-recovery", 100, suite_flag_recovery},
      {"step-identities", 100, suite_step_identities},
      {"trace-pairing-duality", 6, suite_trace_pairing_duality},
      {"group-identities", 200, suite_group_identities},
      {"hitchin-consistency", 100, suite_hitchin_consistency},
      {"discriminant-classifier", 100, suite_discriminant_classifier},
      {"perturbation-nondegeneracy", 200, suite_perturbation_nondegeneracy},
      {"vanishing-subspaces", 50, suite_vanishing_subspaces},
  };
  return reg;
}

inline const SuiteSpec* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace sympcone

#endif
