#pragma once

#include "rsf/multipoly.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsf {

// Thrown when a spectral evaluation hits a genuine pole (or a baxterized
// factor is asked for coincident numeric arguments).
struct SingularPoint : std::runtime_error {
  explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

// One monic linear denominator factor:
//   other >  0 : (u_var - u_other), requiring other < var;
//   other == 0 : (u_var - constant).
struct LinearFactor {
  int var = 0;
  int other = 0;
  Rational constant = Rational(0);

  static LinearFactor symbolic(int var, int other);
  static LinearFactor numeric(int var, Rational c);

  bool is_symbolic() const { return other != 0; }
  MultiPoly to_poly() const;
  int min_var() const { return is_symbolic() ? other : var; }
  std::string to_text() const;

  bool operator==(const LinearFactor& o) const {
    return var == o.var && other == o.other && (is_symbolic() || constant == o.constant);
  }
  bool operator<(const LinearFactor& o) const;
};

// Rational function kept as   numerator / prod(linear factors).
// The denominator is a sorted multiset of monic linear factors; any scalar
// prefactor lives in the numerator's rational coefficients. Fractions are not
// reduced automatically: equality goes through cross-multiplication, and
// cancellation happens exactly where it is forced (pole handling during
// consecutive substitution). reduced() is an optional explicit knob.
class FactoredFraction {
 public:
  FactoredFraction() = default;  // zero
  explicit FactoredFraction(Rational constant);
  explicit FactoredFraction(MultiPoly numerator);
  FactoredFraction(MultiPoly numerator, std::vector<LinearFactor> denominator);

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const;

  const MultiPoly& numerator() const { return num_; }
  const std::vector<LinearFactor>& denominator() const { return den_; }

  FactoredFraction operator+(const FactoredFraction& o) const;
  FactoredFraction operator-(const FactoredFraction& o) const;
  FactoredFraction operator-() const;
  FactoredFraction operator*(const FactoredFraction& o) const;
  FactoredFraction& operator+=(const FactoredFraction& o);
  FactoredFraction& operator*=(const FactoredFraction& o);
  FactoredFraction scaled(const Rational& c) const;

  // Mathematical equality via cross-multiplication against the factor LCM.
  bool operator==(const FactoredFraction& o) const;

  // Substitute u_var := value where var is the lowest variable mentioned
  // anywhere in the fraction (consecutive evaluation order). Denominator
  // factors (u_var - value) must be cancelled by the numerator — otherwise
  // SingularPoint. Factors (u_b - u_var) turn into (u_b - value).
  FactoredFraction substituted_consecutive(int var, const Rational& value) const;

  // Smallest variable mentioned in numerator or denominator; 0 if none.
  int min_var() const;

  // Cancels denominator factors that divide the numerator exactly (optional).
  FactoredFraction reduced() const;

  // Full numeric evaluation; values[i] is the value of u_{i+1}. Throws
  // SingularPoint when a denominator factor vanishes.
  Rational evaluated(const std::vector<Rational>& values) const;

  std::string to_text() const;

 private:
  void normalize();
  MultiPoly num_;
  std::vector<LinearFactor> den_;  // kept sorted
};

}  // namespace rsf
