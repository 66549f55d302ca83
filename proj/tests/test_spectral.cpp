#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sympcone/spectral.hpp"

using namespace sympcone;

namespace {
const PolyRat x = PolyRat::variable();
PolyRat c(long v) { return PolyRat(Rational(v)); }
}  // namespace

TEST_CASE("hitchin on the n=1 companion-style field") {
  SymplecticSpace sp(1);
  Matrix<PolyRat> th(2, 2);
  th(0, 1) = c(1);
  th(1, 0) = -x;
  PolyHiggs higgs = make_poly_higgs(sp, th);
  SpectralData sd = hitchin(higgs);
  CHECK(sd.s[0] == x);  // det theta = x, curve y^2 + x = 0

  Matrix<PolyRat> zero(2, 2);
  CHECK(hitchin(make_poly_higgs(sp, zero)).s[0].is_zero());

  Matrix<PolyRat> bad(2, 2);
  bad(0, 0) = c(1);  // J*theta not symmetric
  CHECK_THROWS_AS(make_poly_higgs(sp, bad), std::invalid_argument);
}

TEST_CASE("hitchin odd coefficients vanish and the curve matches a Laplace determinant") {
  SymplecticSpace sp(2);
  Rng rng(400);
  for (int t = 0; t < 10; ++t) {
    PolyHiggs th = random_poly_higgs(sp, rng, 3);
    SpectralData sd = hitchin(th);
    Polynomial<PolyRat> curve = spectral_curve(sd);
    Matrix<Polynomial<PolyRat>> ymt(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        std::vector<PolyRat> co{-th.entries(i, j)};
        if (i == j) co.push_back(c(1));
        ymt(i, j) = Polynomial<PolyRat>::from_coeffs(std::move(co));
      }
    CHECK(oracles::laplace_det(ymt) == curve);
  }
}

TEST_CASE("cstar action scales with weight 2k") {
  SymplecticSpace sp(2);
  Rng rng(401);
  PolyHiggs th = random_poly_higgs(sp, rng, 2);
  SpectralData sd = hitchin(th);
  CHECK(cstar_scale(sd, Rational(1)).s == sd.s);
  SpectralData zeroed = cstar_scale(sd, Rational(0));
  CHECK(zeroed.s[0].is_zero());
  CHECK(zeroed.s[1].is_zero());
  SpectralData doubled = cstar_scale(sd, Rational(2));
  CHECK(doubled.s[0] == sd.s[0].scaled(Rational(4)));
  CHECK(doubled.s[1] == sd.s[1].scaled(Rational(16)));
  for (Rational lam : {Rational(2), Rational(-1), Rational(1) / 3})
    CHECK(hitchin(scale_higgs(th, lam)).s == cstar_scale(sd, lam).s);
}

TEST_CASE("spectral curve shape and sigma invariance") {
  SpectralData sd1 = make_spectral_data(1, {x});
  Polynomial<PolyRat> p1 = spectral_curve(sd1);
  CHECK(p1.degree() == 2);
  CHECK(p1.coeff(0) == x);
  CHECK(p1.coeff(2) == c(1));

  SpectralData sd2 = make_spectral_data(2, {PolyRat(), x * x});
  Polynomial<PolyRat> p2 = spectral_curve(sd2);
  CHECK(p2.degree() == 4);
  CHECK(p2.coeff(0) == x * x);
  CHECK(p2.coeff(2).is_zero());

  Rng rng(402);
  for (int t = 0; t < 100; ++t) {
    std::vector<PolyRat> s;
    for (std::size_t k = 1; k <= 2; ++k) {
      std::vector<Rational> cs(static_cast<std::size_t>(rng.uniform(0, 6)) + 1);
      for (auto& v : cs) v = rng.small_rational(3);
      s.push_back(PolyRat::from_coeffs(std::move(cs)));
    }
    if (s[1].is_zero()) s[1] = c(1);
    Polynomial<PolyRat> p = spectral_curve(make_spectral_data(2, s));
    CHECK(substitute_neg_y(p) == p);
  }
}

TEST_CASE("discriminant fixtures") {
  using K = DiscriminantClass::Kind;
  DiscriminantClass d1 = classify_discriminant(make_spectral_data(1, {x * x}));
  CHECK(d1.kind == K::D1);
  REQUIRE(d1.d1_witness.has_value());
  CHECK(*d1.d1_witness == x);
  CHECK(!d1.d2_witness.has_value());

  DiscriminantClass smooth =
      classify_discriminant(make_spectral_data(2, {x.scaled(-2), x * x - c(1)}));
  CHECK(smooth.kind == K::Smooth);
  CHECK(!smooth.d1_witness.has_value());
  CHECK(!smooth.d2_witness.has_value());

  DiscriminantClass d2 = classify_discriminant(make_spectral_data(2, {c(-2), c(1) - x * x}));
  CHECK(d2.kind == K::D2);
  REQUIRE(d2.d2_witness.has_value());
  CHECK(*d2.d2_witness == x);

  DiscriminantClass both = classify_discriminant(make_spectral_data(2, {x.scaled(-2), x * x}));
  CHECK(both.kind == K::Both);
  REQUIRE(both.d1_witness.has_value());
  CHECK(*both.d1_witness == x);
  REQUIRE(both.d2_witness.has_value());
  CHECK(both.d2_witness->is_zero());  // Q = (t-x)^2: nodes over every x

  CHECK_THROWS_AS(classify_discriminant(make_spectral_data(1, {PolyRat()})),
                  DegenerateSpectralDataError);
}

TEST_CASE("smooth fixture elimination detail") {
  // Q = (t-x)^2 - 1 and dQ/dt = 2(t-x) have no common zero: Q = -1 there
  SpectralData sd = make_spectral_data(2, {x.scaled(-2), x * x - c(1)});
  Polynomial<PolyRat> q{x * x - c(1), x.scaled(-2), PolyRat(Rational(1))};
  PolyRat r1 = sylvester_resultant(q, q.derivative());
  CHECK(r1.degree() == 0);
  CHECK(!r1.is_zero());
  CHECK(classify_discriminant(sd).kind == DiscriminantClass::Kind::Smooth);
}

TEST_CASE("irrational node pair is detected through the quotient ring") {
  // Q = (t-1)^2 - (x^2-2)^2: nodes at x = +-sqrt(2), t = 1
  PolyRat s4 = c(-3) + (x * x).scaled(Rational(4)) - (x * x) * (x * x);
  DiscriminantClass cls = classify_discriminant(make_spectral_data(2, {c(-2), s4}));
  CHECK(cls.kind == DiscriminantClass::Kind::D2);
  REQUIRE(cls.d2_witness.has_value());
  CHECK(*cls.d2_witness == x * x - c(2));
}

TEST_CASE("factor refinement separates axis nodes from off-axis nodes") {
  // Q = (t-(x+1))^2 - (x^2-1)^2: singular at (1, 2) (off axis) and (-1, 0)
  // (on axis). The eliminant factor x^2-1 must split: D2 certified by x-1
  // only, and the axis node shows up as D1 via the double root of s_4.
  PolyRat s2 = (x + c(1)).scaled(Rational(-2));
  PolyRat s4 = PolyRat::from_coeffs({Rational(0), Rational(2), Rational(3), Rational(0), Rational(-1)});
  DiscriminantClass cls = classify_discriminant(make_spectral_data(2, {s2, s4}));
  CHECK(cls.kind == DiscriminantClass::Kind::Both);
  REQUIRE(cls.d1_witness.has_value());
  CHECK(*cls.d1_witness == x + c(1));
  REQUIRE(cls.d2_witness.has_value());
  CHECK(*cls.d2_witness == x - c(1));
}

TEST_CASE("constant spectral data with a repeated off-axis root") {
  // Q = (t-1)^2 for every x: a horizontal line of nodes at t = 1
  DiscriminantClass cls = classify_discriminant(make_spectral_data(2, {c(-2), c(1)}));
  CHECK(cls.kind == DiscriminantClass::Kind::D2);
  REQUIRE(cls.d2_witness.has_value());
  CHECK(cls.d2_witness->is_zero());
}

TEST_CASE("constant s_2 at n=1 is smooth") {
  DiscriminantClass cls = classify_discriminant(make_spectral_data(1, {c(5)}));
  CHECK(cls.kind == DiscriminantClass::Kind::Smooth);
}

TEST_CASE("planted nodes are always found") {
  // Q = (t - u(x))^2 - v(x) with v = c (x - r)^2 w(x) is singular at
  // (r, u(r)): off the axis it must classify D2, on the axis D1.
  Rng rng(404);
  int off_axis = 0, on_axis = 0;
  for (int t = 0; t < 40; ++t) {
    Rational r = make_rational(Int(rng.uniform(-9, 9)), Int(rng.uniform(1, 4)));
    std::vector<Rational> uc(static_cast<std::size_t>(rng.uniform(1, 3)) + 1);
    for (auto& e : uc) e = rng.small_rational(3);
    PolyRat u = PolyRat::from_coeffs(uc);
    std::vector<Rational> wc(static_cast<std::size_t>(rng.uniform(0, 2)) + 1);
    for (auto& e : wc) e = rng.small_rational(3);
    PolyRat w = PolyRat::from_coeffs(wc);
    if (w.is_zero()) w = c(1);
    PolyRat shift = x - PolyRat(r);
    PolyRat v = (shift * shift * w).scaled(Rational(rng.nonzero_uniform(-3, 3)));
    PolyRat s2 = u.scaled(Rational(-2));
    PolyRat s4 = u * u - v;
    if (s4.is_zero()) continue;
    DiscriminantClass cls = classify_discriminant(make_spectral_data(2, {s2, s4}));
    bool d1 = cls.kind == DiscriminantClass::Kind::D1 || cls.kind == DiscriminantClass::Kind::Both;
    bool d2 = cls.kind == DiscriminantClass::Kind::D2 || cls.kind == DiscriminantClass::Kind::Both;
    if (u.evaluate(r) != 0) {
      CHECK(d2);
      ++off_axis;
    } else {
      CHECK(d1);
      ++on_axis;
    }
  }
  CHECK(off_axis >= 20);  // the seeded stream hits both branches
  CHECK(on_axis >= 1);
}

TEST_CASE("classifier D1 flag matches the double-root membership check") {
  Rng rng(405);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> cs(static_cast<std::size_t>(rng.uniform(1, 6)) + 1);
    for (auto& e : cs) e = rng.small_rational(3);
    PolyRat s4 = PolyRat::from_coeffs(cs);
    if (s4.is_zero()) continue;
    // occasionally square a factor to force a double root
    if (t % 3 == 0) {
      PolyRat f = x - PolyRat(Rational(rng.uniform(-4, 4)));
      s4 = s4 * f * f;
    }
    DiscriminantClass cls = classify_discriminant(make_spectral_data(2, {PolyRat(), s4}));
    bool d1 = cls.kind == DiscriminantClass::Kind::D1 || cls.kind == DiscriminantClass::Kind::Both;
    CHECK(d1 == !d1_as_union_check(s4).is_none());
  }
}

TEST_CASE("hitchin generalizes to n=3") {
  SymplecticSpace sp(3);
  Rng rng(406);
  PolyHiggs th = random_poly_higgs(sp, rng, 2);
  SpectralData sd = hitchin(th);
  CHECK(sd.n == 3);
  Polynomial<PolyRat> curve = spectral_curve(sd);
  CHECK(curve.degree() == 6);
  CHECK(substitute_neg_y(curve) == curve);
  for (Rational lam : {Rational(2), Rational(-1)})
    CHECK(hitchin(scale_higgs(th, lam)).s == cstar_scale(sd, lam).s);
}

TEST_CASE("spectral data validation") {
  CHECK_THROWS_AS(make_spectral_data(2, {x}), std::invalid_argument);
  CHECK_THROWS_AS(make_spectral_data(1, {x * x * x}, {2}), std::invalid_argument);
  SpectralData sd = make_spectral_data(1, {x});
  CHECK(sd.degree_bounds[0] == 8);  // default 2k(2g-2), g = 3
}

TEST_CASE("vanishing subspaces") {
  CHECK(vanishing_subspace(3, Rational(0), 0) == Subspace::full(4));
  Subspace v = vanishing_subspace(3, Rational(0), 2);
  CHECK(v.dim() == 2);
  CHECK(v.contains(Vec{Rational(0), Rational(0), Rational(1), Rational(0)}));  // x^2
  CHECK(v.contains(Vec{Rational(0), Rational(0), Rational(0), Rational(1)}));  // x^3
  CHECK_THROWS_AS(vanishing_subspace(3, Rational(0), 5), std::invalid_argument);

  Rng rng(403);
  for (int t = 0; t < 50; ++t) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 10));
    std::size_t m = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d) + 1));
    Rational x0(rng.uniform(-6, 6));
    Subspace w = vanishing_subspace(d, x0, m);
    CHECK(w.dim() == d + 1 - m);
    for (std::size_t r = 0; r < w.dim(); ++r) {
      PolyRat p = PolyRat::from_coeffs(w.basis_vector(r));
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(p.evaluate(x0) == 0);
        p = p.derivative();
      }
    }
  }
}

TEST_CASE("double root membership check") {
  DoubleRootWitness w1 = d1_as_union_check((x - c(1)) * (x - c(1)) * (x + c(2)));
  REQUIRE(w1.is_rational());
  CHECK(w1.root() == 1);

  CHECK(d1_as_union_check(x * x + c(1)).is_none());

  PolyRat f = (x * x - c(2)) * (x * x - c(2));
  DoubleRootWitness w3 = d1_as_union_check(f);
  REQUIRE((!w3.is_none() && !w3.is_rational()));
  CHECK(w3.factor() == x * x - c(2));
}

TEST_CASE("trace surjectivity") {
  SymplecticSpace sp(1);
  std::vector<Mat> full;
  Subspace es = end_sp_basis(sp);
  for (std::size_t i = 0; i < es.dim(); ++i) full.push_back(unflatten(sp, es.basis_vector(i)));
  CHECK(trace_surjectivity_check(sp, full, 1));

  std::vector<Mat> single{Mat{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}};
  CHECK(!trace_surjectivity_check(sp, single, 1));

  SymplecticSpace sp2(2);
  std::vector<Mat> full2;
  Subspace es2 = end_sp_basis(sp2);
  for (std::size_t i = 0; i < es2.dim(); ++i) full2.push_back(unflatten(sp2, es2.basis_vector(i)));
  CHECK(trace_surjectivity_check(sp2, full2, 1));
  CHECK(trace_surjectivity_check(sp2, full2, 2));
}
