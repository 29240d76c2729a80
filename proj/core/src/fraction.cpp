#include "rsf/fraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rsf {

LinearFactor LinearFactor::symbolic(int var, int other) {
  if (other <= 0 || other >= var || var > kMaxVars)
    throw std::invalid_argument("symbolic factor needs 0 < other < var <= max");
  LinearFactor f;
  f.var = var;
  f.other = other;
  return f;
}

LinearFactor LinearFactor::numeric(int var, Rational c) {
  if (var < 1 || var > kMaxVars) throw std::invalid_argument("factor variable out of range");
  LinearFactor f;
  f.var = var;
  f.constant = std::move(c);
  return f;
}

MultiPoly LinearFactor::to_poly() const {
  if (is_symbolic()) return MultiPoly::variable(var) - MultiPoly::variable(other);
  return MultiPoly::linear(var, constant);
}

std::string LinearFactor::to_text() const {
  if (is_symbolic()) return "(u" + std::to_string(var) + " - u" + std::to_string(other) + ")";
  return "(u" + std::to_string(var) + " - " + rsf::to_text(constant) + ")";
}

bool LinearFactor::operator<(const LinearFactor& o) const {
  if (var != o.var) return var < o.var;
  if (other != o.other) return other < o.other;
  if (is_symbolic()) return false;  // equal symbolic factors
  return constant < o.constant;
}

FactoredFraction::FactoredFraction(Rational constant) : num_(MultiPoly(std::move(constant))) {}

FactoredFraction::FactoredFraction(MultiPoly numerator) : num_(std::move(numerator)) {}

FactoredFraction::FactoredFraction(MultiPoly numerator, std::vector<LinearFactor> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  std::sort(den_.begin(), den_.end());
  normalize();
}

void FactoredFraction::normalize() {
  if (num_.is_zero()) den_.clear();
}

Rational FactoredFraction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant fraction");
  return num_.constant_value();
}

namespace {

// Multiset complement b \ a over sorted factor vectors.
std::vector<LinearFactor> multiset_difference(const std::vector<LinearFactor>& b,
                                              const std::vector<LinearFactor>& a) {
  std::vector<LinearFactor> out;
  std::size_t i = 0, j = 0;
  while (i < b.size()) {
    if (j < a.size() && !(b[i] < a[j]) && !(a[j] < b[i])) {
      ++i;
      ++j;
    } else if (j < a.size() && a[j] < b[i]) {
      ++j;
    } else {
      out.push_back(b[i]);
      ++i;
    }
  }
  return out;
}

std::vector<LinearFactor> multiset_union_max(const std::vector<LinearFactor>& a,
                                             const std::vector<LinearFactor>& b) {
  std::vector<LinearFactor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly product_of(const std::vector<LinearFactor>& fs) {
  MultiPoly p{Rational(1)};
  for (const auto& f : fs) p *= f.to_poly();
  return p;
}

}  // namespace

FactoredFraction FactoredFraction::operator+(const FactoredFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::vector<LinearFactor> lcm = multiset_union_max(den_, o.den_);
  MultiPoly n = num_ * product_of(multiset_difference(lcm, den_)) +
                o.num_ * product_of(multiset_difference(lcm, o.den_));
  return FactoredFraction(std::move(n), std::move(lcm));
}

FactoredFraction FactoredFraction::operator-(const FactoredFraction& o) const {
  return *this + (-o);
}

FactoredFraction FactoredFraction::operator-() const {
  FactoredFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

FactoredFraction FactoredFraction::operator*(const FactoredFraction& o) const {
  if (is_zero() || o.is_zero()) return FactoredFraction();
  std::vector<LinearFactor> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return FactoredFraction(num_ * o.num_, std::move(den));
}

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& o) {
  *this = *this + o;
  return *this;
}

FactoredFraction& FactoredFraction::operator*=(const FactoredFraction& o) {
  *this = *this * o;
  return *this;
}

FactoredFraction FactoredFraction::scaled(const Rational& c) const {
  if (c == 0) return FactoredFraction();
  FactoredFraction out = *this;
  out.num_ = out.num_.scaled(c);
  return out;
}

bool FactoredFraction::operator==(const FactoredFraction& o) const {
  std::vector<LinearFactor> lcm = multiset_union_max(den_, o.den_);
  MultiPoly left = num_ * product_of(multiset_difference(lcm, den_));
  MultiPoly right = o.num_ * product_of(multiset_difference(lcm, o.den_));
  return left == right;
}

int FactoredFraction::min_var() const {
  int best = num_.min_var();
  for (const auto& f : den_) {
    int v = f.min_var();
    if (best == 0 || (v != 0 && v < best)) best = v;
  }
  return best;
}

FactoredFraction FactoredFraction::substituted_consecutive(int var, const Rational& value) const {
  if (var < 1 || var > kMaxVars) throw std::invalid_argument("substitution variable out of range");
  int mv = min_var();
  if (mv != 0 && mv < var) {
    throw std::invalid_argument("consecutive substitution requires u" + std::to_string(var) +
                                " to be the lowest live variable (found u" + std::to_string(mv) +
                                ")");
  }

  MultiPoly n = num_;
  std::vector<LinearFactor> new_den;
  Rational scale(1);
  int poles = 0;
  for (const auto& f : den_) {
    if (f.var == var) {
      // By the consecutive-order check, a factor with f.var == var cannot be
      // symbolic (its other end would be a lower live variable).
      if (f.constant == value) {
        ++poles;
      } else {
        scale /= (value - f.constant);
      }
    } else if (f.is_symbolic() && f.other == var) {
      new_den.push_back(LinearFactor::numeric(f.var, value));
    } else {
      new_den.push_back(f);
    }
  }
  for (int k = 0; k < poles; ++k) {
    try {
      n = n.divided_by_linear(var, value);
    } catch (const NonzeroRemainder&) {
      throw SingularPoint("substitution u" + std::to_string(var) + " = " + rsf::to_text(value) +
                          " hits an uncancelled pole");
    }
  }
  n = n.substituted(var, value);
  if (scale != 1) n = n.scaled(scale);
  return FactoredFraction(std::move(n), std::move(new_den));
}

FactoredFraction FactoredFraction::reduced() const {
  MultiPoly n = num_;
  std::vector<LinearFactor> den;
  for (const auto& f : den_) {
    if (f.is_symbolic()) {
      // Dividing by (u_var - u_other) exactly: treat as division in u_var by
      // viewing u_other as part of the coefficient ring is not linear in one
      // variable for the packed representation, so only numeric factors are
      // cancelled here.
      den.push_back(f);
      continue;
    }
    try {
      n = n.divided_by_linear(f.var, f.constant);
    } catch (const NonzeroRemainder&) {
      den.push_back(f);
    }
  }
  return FactoredFraction(std::move(n), std::move(den));
}

Rational FactoredFraction::evaluated(const std::vector<Rational>& values) const {
  auto value_of = [&](int var) -> const Rational& {
    if (var < 1 || static_cast<std::size_t>(var) > values.size())
      throw std::invalid_argument("evaluation point missing a variable");
    return values[static_cast<std::size_t>(var) - 1];
  };
  Rational den(1);
  for (const auto& f : den_) {
    Rational v = f.is_symbolic() ? value_of(f.var) - value_of(f.other)
                                 : value_of(f.var) - f.constant;
    if (v == 0) throw SingularPoint("evaluation hits denominator zero at " + f.to_text());
    den *= v;
  }
  MultiPoly n = num_;
  for (int var = n.max_var(); var != 0; var = n.max_var()) n = n.substituted(var, value_of(var));
  return n.constant_value() / den;
}

std::string FactoredFraction::to_text() const {
  std::string out = "[" + num_.to_text() + "]";
  if (!den_.empty()) {
    out += " / ";
    for (const auto& f : den_) out += f.to_text();
  }
  return out;
}

}  // namespace rsf
