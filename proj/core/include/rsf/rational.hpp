#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rsf {

// Exact arbitrary-precision rationals. Always stored canonically
// (reduced, positive denominator) by the GMP backend.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// base^exp with exp possibly negative; throws std::domain_error on 0^negative.
Rational rational_pow(const Rational& base, long exp);

// Parses "p/q" or "p" with an optional leading '-'. Rejects anything else
// (whitespace, empty numerator, zero denominator, stray characters).
std::optional<Rational> parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string to_text(const Rational& x);

// Deformation parameters. Everything downstream divides by r, s, r - s and
// r + s at some point (quadratic relations, eigenvalue splittings), so the
// constructor enforces r, s nonzero and r != +/- s once and for all.
struct Params {
  Rational r;
  Rational s;

  Params(Rational r_in, Rational s_in);

  // nullopt when (r, s) is admissible, otherwise a human-readable reason.
  static std::optional<std::string> validate(const Rational& r, const Rational& s);

  Rational r_over_s() const { return r / s; }
  Rational s_over_r() const { return s / r; }
  // (s/r)^c — the eigenvalue attached to a box of diagonal content c.
  Rational content_value(long c) const { return rational_pow(s / r, c); }
};

}  // namespace rsf
