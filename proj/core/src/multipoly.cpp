#include "rsf/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rsf {

namespace {
int shift_for(int var) {
  if (var < 1 || var > kMaxVars) throw std::out_of_range("variable index out of range");
  return 8 * (kMaxVars - var);
}
}  // namespace

int mono_exponent(Monomial m, int var) {
  return static_cast<int>((m >> shift_for(var)) & 0xffu);
}

Monomial mono_with_exponent(Monomial m, int var, int e) {
  if (e < 0 || e > 255) throw std::out_of_range("monomial exponent out of range");
  int sh = shift_for(var);
  m &= ~(Monomial(0xffu) << sh);
  m |= Monomial(static_cast<unsigned>(e)) << sh;
  return m;
}

Monomial mono_mul(Monomial a, Monomial b) {
  Monomial out = 0;
  for (int v = 1; v <= kMaxVars; ++v) {
    int e = mono_exponent(a, v) + mono_exponent(b, v);
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    out = mono_with_exponent(out, v, e);
  }
  return out;
}

int mono_min_var(Monomial m) {
  for (int v = 1; v <= kMaxVars; ++v)
    if (mono_exponent(m, v) > 0) return v;
  return 0;
}

int mono_max_var(Monomial m) {
  for (int v = kMaxVars; v >= 1; --v)
    if (mono_exponent(m, v) > 0) return v;
  return 0;
}

std::string mono_text(Monomial m) {
  std::string out;
  for (int v = 1; v <= kMaxVars; ++v) {
    int e = mono_exponent(m, v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "u" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(Rational constant) {
  if (constant != 0) terms_.emplace(Monomial(0), std::move(constant));
}

MultiPoly MultiPoly::variable(int var) {
  MultiPoly p;
  p.terms_.emplace(mono_with_exponent(0, var, 1), Rational(1));
  return p;
}

MultiPoly MultiPoly::linear(int var, const Rational& c) {
  MultiPoly p = variable(var);
  p += MultiPoly(-c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int MultiPoly::min_var() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int v = mono_min_var(m);
    if (v != 0 && (best == 0 || v < best)) best = v;
  }
  return best;
}

int MultiPoly::max_var() const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, mono_max_var(m));
  return best;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out;
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

MultiPoly MultiPoly::substituted(int var, const Rational& value) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    int e = mono_exponent(m, var);
    Monomial rest = mono_with_exponent(m, var, 0);
    out.add_term(rest, e == 0 ? c : c * rational_pow(value, e));
  }
  return out;
}

MultiPoly MultiPoly::divided_by_linear(int var, const Rational& root) const {
  // Synthetic division in the variable u_var with polynomial coefficients:
  // write p = sum_d c_d * u_var^d, then q_{d} = c_{d+1} + root * q_{d+1}
  // descending, and the remainder c_0 + root * q_0 must vanish.
  int top = 0;
  for (const auto& [m, c] : terms_) top = std::max(top, mono_exponent(m, var));
  std::vector<MultiPoly> coeff(static_cast<std::size_t>(top) + 1);
  for (const auto& [m, c] : terms_) {
    int e = mono_exponent(m, var);
    MultiPoly t;
    t.terms_.emplace(mono_with_exponent(m, var, 0), c);
    coeff[static_cast<std::size_t>(e)] += t;
  }
  std::vector<MultiPoly> q(static_cast<std::size_t>(top) + 1);  // q[d] multiplies u_var^d in the quotient
  MultiPoly carry;                                              // root * q_d running term
  for (int d = top - 1; d >= 0; --d) {
    q[static_cast<std::size_t>(d)] = coeff[static_cast<std::size_t>(d) + 1] + carry;
    carry = q[static_cast<std::size_t>(d)].scaled(root);
  }
  MultiPoly remainder = (top == 0) ? coeff[0] : coeff[0] + carry;
  if (!remainder.is_zero()) {
    throw NonzeroRemainder("division by (u" + std::to_string(var) + " - " + rsf::to_text(root) +
                           ") leaves remainder " + remainder.to_text());
  }
  MultiPoly out;
  for (int d = 0; d < top; ++d) {
    for (const auto& [m, c] : q[static_cast<std::size_t>(d)].terms_) {
      out.add_term(mono_with_exponent(m, var, mono_exponent(m, var) + d), c);
    }
  }
  return out;
}

std::string MultiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + rsf::to_text(c) + ")";
    if (m != 0) out += "*" + mono_text(m);
  }
  return out;
}

}  // namespace rsf
