#pragma once

#include "rsf/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace rsf {

// Thrown when an exact division by (u_var - root) leaves a remainder.
struct NonzeroRemainder : std::runtime_error {
  explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

// Exponent vector for the spectral variables u_1..u_8, packed one byte per
// variable (u_1 in the most significant byte so that the integer order is
// a graded-friendly lex order on exponents).
using Monomial = std::uint64_t;

inline constexpr int kMaxVars = 8;

int mono_exponent(Monomial m, int var);              // var is 1-based
Monomial mono_with_exponent(Monomial m, int var, int e);
Monomial mono_mul(Monomial a, Monomial b);           // throws on per-variable overflow
int mono_min_var(Monomial m);                        // smallest var present, 0 if none
int mono_max_var(Monomial m);                        // largest var present, 0 if none
std::string mono_text(Monomial m);                   // "u1^2*u3" style, "1" for the unit

// Sparse multivariate polynomial in u_1..u_8 over Rational.
class MultiPoly {
 public:
  MultiPoly() = default;                       // zero
  explicit MultiPoly(Rational constant);
  static MultiPoly variable(int var);          // u_var
  static MultiPoly linear(int var, const Rational& c);  // u_var - c

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial included).
  Rational constant_value() const;
  int min_var() const;                         // 0 when no variable occurs
  int max_var() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scaled(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Replace u_var by a rational value.
  MultiPoly substituted(int var, const Rational& value) const;
  // Exact division by (u_var - root); throws NonzeroRemainder when inexact.
  MultiPoly divided_by_linear(int var, const Rational& root) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::string to_text() const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

}  // namespace rsf
