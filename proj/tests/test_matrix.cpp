#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sympcone/charpoly.hpp"
#include "sympcone/matrix.hpp"
#include "sympcone/nilpotent.hpp"
#include "sympcone/rng.hpp"
#include "sympcone/subspace.hpp"
#include "sympcone/symplectic.hpp"

using namespace sympcone;

namespace {
Mat random_mat(Rng& rng, std::size_t r, std::size_t c, long bound = 5) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.small_rational(bound);
  return m;
}
}  // namespace

TEST_CASE("rref basics") {
  auto r = rref(Mat::identity(2));
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});

  Mat m{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  auto r2 = rref(m);
  CHECK(r2.rank == 1);
  CHECK(r2.pivot_cols == std::vector<std::size_t>{1});
}

TEST_CASE("rref is idempotent and rank matches the minor oracle") {
  Rng rng(101);
  for (int t = 0; t < 12; ++t) {
    Mat m = random_mat(rng, 6, 6, 3);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank == oracles::minor_rank(m));
  }
}

TEST_CASE("kernel examples and rank-nullity") {
  Mat m{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec{Rational(1), Rational(0)}));
  CHECK(kernel(Mat::identity(3)).dim() == 0);

  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    Mat a = random_mat(rng, 5, 7, 2);
    CHECK(rank(a) + kernel(a).dim() == 7);
  }
}

TEST_CASE("kernel powers of a regular nilpotent") {
  SymplecticSpace sp(2);
  ConePoint reg = regular_nilpotent(sp);
  Mat pow = reg.a;
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(kernel(pow).dim() == i);
    CHECK(oracles::minor_rank(pow) == 4 - i);
    pow = pow * reg.a;
  }
}

TEST_CASE("charpoly examples") {
  PolyRat p = charpoly(Mat::identity(3));
  // (t-1)^3
  CHECK(p == PolyRat{Rational(-1), Rational(3), Rational(-3), Rational(1)});
  Mat rot{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
  CHECK(charpoly(rot) == PolyRat{Rational(1), Rational(0), Rational(1)});
}

TEST_CASE("charpoly agrees with the expansion oracle and is conjugation invariant") {
  Rng rng(33);
  for (int t = 0; t < 8; ++t) {
    Mat m = random_mat(rng, 4, 4, 3);
    CHECK(charpoly(m) == oracles::charpoly_expansion(m));
  }
  SymplecticSpace sp(2);
  for (int t = 0; t < 5; ++t) {
    Mat m = random_mat(rng, 4, 4, 3);
    Mat p = random_sp(sp, rng);
    CHECK(charpoly(p * m * inverse(p)) == charpoly(m));
  }
}

TEST_CASE("symplectic-symmetric matrices have even characteristic polynomials") {
  SymplecticSpace sp(2);
  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    Mat a = random_end_sp(sp, rng);
    PolyRat p = charpoly(a);
    CHECK(p == oracles::charpoly_expansion(a));
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(1) == 0);
  }
}

TEST_CASE("ext_trace examples") {
  CHECK(ext_trace(Mat::identity(4), 2) == 6);
  CHECK(ext_trace(Mat::identity(4), 0) == 1);
  Mat d(4, 4);
  for (std::size_t i = 0; i < 4; ++i) d(i, i) = Rational(static_cast<long>(i + 1));
  CHECK(ext_trace(d, 2) == 35);  // sum of 2x2 principal minors
  CHECK(ext_trace(d, 4) == 24);
  CHECK_THROWS_AS(ext_trace(d, 5), std::invalid_argument);
}

TEST_CASE("charpoly equals the alternating ext_trace sum") {
  Rng rng(77);
  Mat m = random_mat(rng, 5, 5, 2);
  PolyRat p = charpoly(m);
  for (std::size_t k = 0; k <= 5; ++k) {
    Rational expect = (k % 2 == 0) ? p.coeff(5 - k) : -p.coeff(5 - k);
    CHECK(ext_trace(m, k) == expect);
  }
}

TEST_CASE("determinant and inverse") {
  Rng rng(11);
  for (int t = 0; t < 8; ++t) {
    Mat m = random_mat(rng, 4, 4, 3);
    CHECK(determinant(m) == oracles::laplace_det(m));
    if (determinant(m) != 0) CHECK(m * inverse(m) == Mat::identity(4));
  }
  CHECK_THROWS_AS(inverse(Mat(2, 2)), std::invalid_argument);
}
