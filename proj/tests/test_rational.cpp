#include <catch2/catch_amalgamated.hpp>

#include "sympcone/rational.hpp"

using namespace sympcone;

TEST_CASE("rationals parse and stay canonical") {
  CHECK(parse_rational("2/4") == Rational(1) / 2);
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("1/-2")) == "-1/2");
  CHECK(denominator(parse_rational("1/-2")) == 1 * 2);
  CHECK(parse_rational("-6/3") == Rational(-2));
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(parse_rational("0/7") == 0);
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("5") == 5);
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("round trips through strings") {
  for (long p = -7; p <= 7; ++p)
    for (long q = 1; q <= 5; ++q) {
      Rational r = Rational(p) / q;
      CHECK(parse_rational(to_string(r)) == r);
      CHECK(denominator(r) > 0);
    }
}
