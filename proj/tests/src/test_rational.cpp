#include "doctest.h"

#include "rsf/rational.hpp"

#include <random>

using namespace rsf;

TEST_CASE("rational text round trips") {
  for (const char* text : {"0", "1", "-1", "7", "-3", "1/2", "-22/7", "100000000000000000001/3"}) {
    auto x = parse_rational(text);
    REQUIRE(x.has_value());
    CHECK(to_text(*x) == text);
  }
}

TEST_CASE("rational parse rejects malformed input") {
  for (const char* text : {"", "a", "1/0", "2/-3", "1/2/3", "+3", "1.5", " 1", "3 ", "--2", "/2", "2/"}) {
    CHECK_FALSE(parse_rational(text).has_value());
  }
}

TEST_CASE("parse normalizes to lowest terms") {
  auto x = parse_rational("6/4");
  REQUIRE(x.has_value());
  CHECK(to_text(*x) == "3/2");
  CHECK(*x == Rational(3) / 2);
}

TEST_CASE("rational_pow matches repeated multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    long num = static_cast<long>(rng() % 13) - 6;
    long den = static_cast<long>(rng() % 6) + 1;
    Rational base = Rational(num) / den;
    for (long exp = -8; exp <= 8; ++exp) {
      if (base == 0 && exp < 0) continue;
      Rational expected(1);
      for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) expected *= base;
      if (exp < 0) expected = Rational(1) / expected;
      CHECK(rational_pow(base, exp) == expected);
    }
  }
}

TEST_CASE("rational_pow rejects inverting zero") {
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("parameter gate") {
  CHECK_FALSE(Params::validate(Rational(2), Rational(3)).has_value());
  CHECK_FALSE(Params::validate(Rational(1) / 2, Rational(5)).has_value());
  CHECK(Params::validate(Rational(2), Rational(2)).value() == "parameters require r ≠ ±s");
  CHECK(Params::validate(Rational(2), Rational(-2)).value() == "parameters require r ≠ ±s");
  CHECK(Params::validate(Rational(0), Rational(3)).value() == "parameters require nonzero r and s");
  CHECK(Params::validate(Rational(3), Rational(0)).value() == "parameters require nonzero r and s");
  CHECK_THROWS_AS(Params(Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("parameter ratios and content values") {
  Params p(Rational(2), Rational(3));
  CHECK(p.r_over_s() == Rational(2) / 3);
  CHECK(p.s_over_r() == Rational(3) / 2);
  CHECK(p.content_value(0) == 1);
  CHECK(p.content_value(2) == Rational(9) / 4);
  CHECK(p.content_value(-1) == Rational(2) / 3);
}
