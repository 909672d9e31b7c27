#include <doctest.h>

#include <random>

#include "qind/errors.hpp"
#include "qind/rational.hpp"

using qind::Rational;

TEST_CASE("rational parses integers, decimals, and fractions") {
  CHECK(Rational::parse("3") == Rational{3});
  CHECK(Rational::parse("-7") == Rational{-7});
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("2.50") == Rational(5, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));

  CHECK_FALSE(Rational::parse(""));
  CHECK_FALSE(Rational::parse("abc"));
  CHECK_FALSE(Rational::parse("1e3"));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("1.2.3"));
}

TEST_CASE("rational arithmetic stays normalized") {
  const Rational a(1, 2);
  const Rational b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational{0}, qind::ContractViolation);
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(1, 3) > Rational(33, 100));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(2, 6) >= Rational(1, 3));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(5, 2).to_decimal(2) == "2.50");
  CHECK(Rational(1, 3).to_decimal(2) == "0.33");
  CHECK(Rational(2, 3).to_decimal(2) == "0.67");
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational{4}.to_decimal(2) == "4.00");
  CHECK(Rational{0}.to_decimal(2) == "0.00");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(Rational(10, 3).to_decimal(0) == "3");
}

TEST_CASE("canonical string form round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> nums(-500, 500);
  std::uniform_int_distribution<std::int64_t> dens(1, 500);
  for (int i = 0; i < 500; ++i) {
    const Rational r(nums(rng), dens(rng));
    CHECK(Rational::parse(r.to_string()) == r);
  }
}
