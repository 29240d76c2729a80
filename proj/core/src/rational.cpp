#include "rsf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rsf {

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    return Rational(0);
  }
  bool invert = exp < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-(exp + 1)) + 1ul
                           : static_cast<unsigned long>(exp);
  Rational acc(1);
  Rational sq = base;
  while (k) {
    if (k & 1ul) acc *= sq;
    sq *= sq;
    k >>= 1;
  }
  return invert ? Rational(1) / acc : acc;
}

namespace {

bool parse_integer(std::string_view text, BigInt* out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool neg = false;
  if (text[0] == '-') {
    neg = true;
    pos = 1;
  }
  if (pos == text.size()) return false;
  BigInt v(0);
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  if (neg) v = -v;
  *out = v;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) return std::nullopt;
  }
  BigInt num;
  if (!parse_integer(num_part, &num)) return std::nullopt;
  if (den_part.empty() && text.find('/') == std::string_view::npos) {
    return Rational(num);
  }
  BigInt den;
  if (!parse_integer(den_part, &den)) return std::nullopt;
  if (den <= 0) return std::nullopt;  // canonical input keeps the sign up front
  return Rational(num) / Rational(den);
}

std::string to_text(const Rational& x) {
  return x.str();
}

std::optional<std::string> Params::validate(const Rational& r, const Rational& s) {
  if (r == 0 || s == 0) return std::string("parameters require nonzero r and s");
  if (r == s || r == -s) return std::string("parameters require r ≠ ±s");
  return std::nullopt;
}

Params::Params(Rational r_in, Rational s_in) : r(std::move(r_in)), s(std::move(s_in)) {
  if (auto why = validate(r, s)) throw std::invalid_argument(*why);
}

}  // namespace rsf
