#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bic/rational.hpp"

#include <stdexcept>

using namespace bic;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("string forms") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("parse round-trips through str") {
  for (std::int64_t n = -20; n <= 20; ++n)
    for (std::int64_t d = 1; d <= 9; ++d) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
}
