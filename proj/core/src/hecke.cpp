#include "rsf/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsf {

HeckeElement<FactoredFraction> lift_to_fractions(const HeckeElement<Rational>& a) {
  HeckeElement<FactoredFraction> out(a.algebra());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, FactoredFraction(c));
  return out;
}

HeckeElement<Rational> gen_inverse(const HeckeAlgebra& alg, int i) {
  Rational sr = alg.params().s_over_r();
  HeckeElement<Rational> out = he_gen<Rational>(alg, i).scaled(sr);
  out.add_term(alg.group().identity_index(), Rational(1) - sr);
  return out;
}

HeckeElement<Rational> t_longest(const HeckeAlgebra& alg, int k) {
  if (k < 1 || k > alg.arity()) throw std::out_of_range("longest-element rank out of range");
  Permutation w = Permutation::longest_in_prefix(alg.arity(), k);
  return t_word(alg, w);
}

HeckeElement<Rational> t_longest_inverse(const HeckeAlgebra& alg, int k) {
  if (k < 1 || k > alg.arity()) throw std::out_of_range("longest-element rank out of range");
  Permutation w = Permutation::longest_in_prefix(alg.arity(), k);
  std::vector<int> word = w.reduced_word();
  HeckeElement<Rational> out = he_one<Rational>(alg);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = he_mul(out, gen_inverse(alg, *it));
  return out;
}

HeckeElement<Rational> jm(const HeckeAlgebra& alg, int k) {
  if (k < 1 || k > alg.arity()) throw std::out_of_range("Jucys-Murphy index out of range");
  Rational sr = alg.params().s_over_r();
  HeckeElement<Rational> y = he_one<Rational>(alg);
  for (int j = 1; j < k; ++j) {
    HeckeElement<Rational> t = he_gen<Rational>(alg, j);
    y = he_mul(he_mul(t, y), t).scaled(sr);
  }
  return y;
}

HeckeElement<Rational> embed(const HeckeAlgebra& alg, const HeckeElement<Rational>& small) {
  const HeckeAlgebra* src = small.algebra();
  if (src == nullptr) throw std::invalid_argument("cannot embed an unattached element");
  if (src->arity() > alg.arity()) throw std::invalid_argument("embedding must not shrink arity");
  if (!(src->params().r == alg.params().r && src->params().s == alg.params().s))
    throw std::invalid_argument("embedding requires equal parameters");
  HeckeElement<Rational> out(&alg);
  for (const auto& [idx, c] : small.terms()) {
    std::vector<int> word = src->group().one_line(idx);
    for (int v = src->arity() + 1; v <= alg.arity(); ++v) word.push_back(v);
    out.add_term(alg.group().index_of(word), c);
  }
  return out;
}

HeckeElement<Rational> jm_idempotent(const HeckeAlgebra& alg, const Partition& lambda,
                                     const StandardTableau& tableau) {
  int m = alg.arity();
  if (!(tableau.shape() == lambda)) throw std::invalid_argument("tableau shape differs from lambda");
  if (lambda.weight() != m) throw std::invalid_argument("lambda must be a partition of the arity");

  if (m == 1) return he_one<Rational>(alg);

  StandardTableau previous = tableau.without_last();
  Partition mu = previous.shape();
  HeckeAlgebra smaller(m - 1, alg.params());
  HeckeElement<Rational> e = embed(alg, jm_idempotent(smaller, mu, previous));

  Cell alpha = tableau.cell_of(m);
  Rational sigma = alg.params().content_value(alpha.content());
  HeckeElement<Rational> y = jm(alg, m);

  for (const Cell& beta : mu.addable_cells()) {
    if (beta == alpha) continue;
    Rational rho = alg.params().content_value(beta.content());
    // e *= (y_m - rho) / (sigma - rho); the gate keeps sigma != rho.
    HeckeElement<Rational> factor = y;
    factor.add_term(alg.group().identity_index(), -rho);
    e = he_mul(e, factor).scaled(Rational(1) / (sigma - rho));
  }
  return e;
}

CheckReport hecke_relations_report(const HeckeAlgebra& alg) {
  CheckReport report;
  int m = alg.arity();
  Rational q = alg.quad_ratio();
  auto one = he_one<Rational>(alg);

  // Braid relation on adjacent generator pairs.
  {
    bool ok = true;
    for (int i = 1; i + 1 < m; ++i) {
      auto a = he_gen<Rational>(alg, i);
      auto b = he_gen<Rational>(alg, i + 1);
      if (!(he_mul(he_mul(a, b), a) == he_mul(he_mul(b, a), b))) ok = false;
    }
    report.add("braid relation T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", ok);
  }

  // Distant generators commute.
  {
    bool ok = true;
    for (int i = 1; i < m; ++i)
      for (int j = i + 2; j < m; ++j) {
        auto a = he_gen<Rational>(alg, i);
        auto b = he_gen<Rational>(alg, j);
        if (!(he_mul(a, b) == he_mul(b, a))) ok = false;
      }
    report.add("distant generators commute", ok);
  }

  // Quadratic relation (T_i - 1)(T_i + r/s) = 0.
  {
    bool ok = true;
    for (int i = 1; i < m; ++i) {
      auto t = he_gen<Rational>(alg, i);
      auto lhs = he_mul(t - one, t + one.scaled(q));
      if (!lhs.is_zero()) ok = false;
    }
    report.add("quadratic relation (T_i - 1)(T_i + r/s) = 0", ok);
  }

  // Generator inverses.
  {
    bool ok = true;
    for (int i = 1; i < m; ++i) {
      if (!(he_mul(he_gen<Rational>(alg, i), gen_inverse(alg, i)) == one)) ok = false;
      if (!(he_mul(gen_inverse(alg, i), he_gen<Rational>(alg, i)) == one)) ok = false;
    }
    report.add("T_i T_i^{-1} = T_i^{-1} T_i = 1", ok);
  }

  // Longest-element conjugation: T_{w_k} T_j = T_{k-j} T_{w_k} for 1 <= j < k.
  {
    bool ok = true;
    for (int k = 2; k <= m; ++k) {
      auto w = t_longest(alg, k);
      for (int j = 1; j < k; ++j) {
        auto lhs = he_mul(w, he_gen<Rational>(alg, j));
        auto rhs = he_mul(he_gen<Rational>(alg, k - j), w);
        if (!(lhs == rhs)) ok = false;
      }
    }
    report.add("longest-element conjugation T_w T_j = T_{k-j} T_w", ok);
  }

  // Full-twist identity: T_{w_k}^2 = (r/s)^{k(k-1)/2} y_1 y_2 ... y_k.
  // (The k-1 exponent sometimes quoted fails from k = 3 on; the one-dimensional
  // representation T_i -> 1 forces the exponent to equal the length of w_k.)
  {
    bool ok = true;
    for (int k = 1; k <= m; ++k) {
      auto w = t_longest(alg, k);
      auto lhs = he_mul(w, w);
      auto rhs = he_one<Rational>(alg);
      for (int j = 1; j <= k; ++j) rhs = he_mul(rhs, jm(alg, j));
      rhs = rhs.scaled(rational_pow(q, static_cast<long>(k) * (k - 1) / 2));
      if (!(lhs == rhs)) ok = false;
    }
    report.add("full twist T_w^2 = (r/s)^{k(k-1)/2} y_1...y_k", ok);
  }

  // Jucys-Murphy elements commute pairwise and with distant generators.
  {
    bool ok = true;
    std::vector<HeckeElement<Rational>> ys;
    for (int k = 1; k <= m; ++k) ys.push_back(jm(alg, k));
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b)
        if (!(he_mul(ys[a], ys[b]) == he_mul(ys[b], ys[a]))) ok = false;
    report.add("Jucys-Murphy elements commute", ok);
  }
  {
    bool ok = true;
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l < m; ++l) {
        if (l == k || l == k - 1) continue;
        auto t = he_gen<Rational>(alg, l);
        auto y = jm(alg, k);
        if (!(he_mul(y, t) == he_mul(t, y))) ok = false;
      }
    report.add("y_k commutes with T_l for l != k-1, k", ok);
  }

  return report;
}

}  // namespace rsf
