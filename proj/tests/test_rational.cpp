#include <doctest.h>

#include <stdexcept>

#include "phasekit/rational.hpp"

using namespace phasekit;

TEST_CASE("reduction and printing") {
  CHECK(Rational(14, 40).to_string() == "7/20");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("arithmetic") {
  Rational a(1, 6), b(1, 10);
  CHECK((a + b).to_string() == "4/15");
  CHECK((a - b).to_string() == "1/15");
  CHECK((a * b).to_string() == "1/60");
  CHECK((a / b).to_string() == "5/3");
  CHECK(Rational(7, 20).to_double() == doctest::Approx(0.35));
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big = Rational::from_int128((__int128(1) << 100), 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("binomials") {
  CHECK(binomial_rational(4, 2) == Rational(6));
  CHECK(binomial_rational(20, 10) == Rational(184756));
  CHECK(binomial_rational(5, 7) == Rational(0));
  CHECK(binomial_rational(7, 0) == Rational(1));
}
