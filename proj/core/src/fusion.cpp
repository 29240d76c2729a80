#include "rsf/fusion.hpp"

#include <chrono>
#include <stdexcept>

namespace rsf {

namespace {

// (s - r) * x / (y - x) as a factored fraction over the variables of x, y.
FactoredFraction baxter_scalar(const Params& params, const SpectralArg& x, const SpectralArg& y) {
  Rational d = params.s - params.r;
  if (x.is_symbolic() && y.is_symbolic()) {
    if (x.var == y.var) throw std::invalid_argument("Baxterized arguments must differ");
    MultiPoly num = MultiPoly::variable(x.var).scaled(d);
    if (x.var < y.var) {
      return FactoredFraction(std::move(num), {LinearFactor::symbolic(y.var, x.var)});
    }
    // (y - x) = -(u_x - u_y)
    return FactoredFraction(-std::move(num), {LinearFactor::symbolic(x.var, y.var)});
  }
  if (x.is_symbolic()) {
    // (y - x) = -(u_x - y_value)
    MultiPoly num = MultiPoly::variable(x.var).scaled(-d);
    return FactoredFraction(std::move(num), {LinearFactor::numeric(x.var, y.value)});
  }
  if (y.is_symbolic()) {
    return FactoredFraction(MultiPoly(d * x.value), {LinearFactor::numeric(y.var, x.value)});
  }
  if (x.value == y.value) throw SingularPoint("Baxterized generator at coincident numeric points");
  return FactoredFraction(d * x.value / (y.value - x.value));
}

}  // namespace

HeckeElement<FactoredFraction> baxterized(const HeckeAlgebra& alg, int i, const SpectralArg& x,
                                          const SpectralArg& y) {
  HeckeElement<FactoredFraction> out = lift_to_fractions(he_gen<Rational>(alg, i).scaled(alg.params().s));
  out.add_term(alg.group().identity_index(), baxter_scalar(alg.params(), x, y));
  return out;
}

HeckeElement<FactoredFraction> psi(const HeckeAlgebra& alg) {
  int m = alg.arity();
  HeckeElement<FactoredFraction> p = he_one<FactoredFraction>(alg);
  for (int k = 1; k < m; ++k) {
    for (int j = k; j >= 1; --j) {
      // T_j(u_{k-j+1}, u_{k+1})
      p = he_mul(p, baxterized(alg, j, SpectralArg::variable(k - j + 1),
                               SpectralArg::variable(k + 1)));
    }
  }
  // Times T_{w_m}^{-1}, one generator inverse at a time (cheap small factors).
  std::vector<int> word = Permutation::longest_in_prefix(m, m).reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = he_mul(p, lift_to_fractions(gen_inverse(alg, *it)));
  return p;
}

HeckeElement<FactoredFraction> substitute_consecutive(const HeckeElement<FactoredFraction>& e,
                                                      int var, const Rational& value) {
  HeckeElement<FactoredFraction> out(e.algebra());
  for (const auto& [idx, c] : e.terms()) out.add_term(idx, c.substituted_consecutive(var, value));
  return out;
}

HeckeElement<Rational> to_rational_element(const HeckeElement<FactoredFraction>& e) {
  HeckeElement<Rational> out(e.algebra());
  for (const auto& [idx, c] : e.terms()) {
    if (!c.is_constant())
      throw std::logic_error("element still carries live spectral variables");
    out.add_term(idx, c.constant_value());
  }
  return out;
}

Rational f_const(const Params& params, const Partition& lambda) {
  int m = lambda.weight();
  Rational x = params.s_over_r();
  Rational out = rational_pow(x, lambda.conjugate().b_stat());
  out *= rational_pow(params.s, -(static_cast<long>(m) * (m - 1) / 2));
  out *= rational_pow(Rational(1) - x, m);
  for (const auto& [cell, hook] : lambda.hooks()) {
    Rational factor = Rational(1) - rational_pow(x, hook);
    out /= factor;  // nonzero under the parameter gate
  }
  return out;
}

HeckeElement<Rational> fused_idempotent_given_psi(const HeckeElement<FactoredFraction>& psi_element,
                                                  const Partition& lambda,
                                                  const StandardTableau& tableau) {
  const HeckeAlgebra& alg = *psi_element.algebra();
  if (!(tableau.shape() == lambda)) throw std::invalid_argument("tableau shape differs from lambda");
  if (lambda.weight() != alg.arity())
    throw std::invalid_argument("lambda must be a partition of the arity");
  std::vector<int> contents = tableau.content_exponents();
  HeckeElement<FactoredFraction> cur = psi_element;
  for (int k = 1; k <= alg.arity(); ++k) {
    Rational value = alg.params().content_value(contents[static_cast<std::size_t>(k) - 1]);
    cur = substitute_consecutive(cur, k, value);
  }
  return to_rational_element(cur).scaled(f_const(alg.params(), lambda));
}

HeckeElement<Rational> fused_idempotent(const HeckeAlgebra& alg, const Partition& lambda,
                                        const StandardTableau& tableau) {
  return fused_idempotent_given_psi(psi(alg), lambda, tableau);
}

std::vector<FusionComparison> verify_fusion_equals_jm(const HeckeAlgebra& alg) {
  std::vector<FusionComparison> out;
  HeckeElement<FactoredFraction> psi_element = psi(alg);
  for (const Partition& lambda : partitions_of(alg.arity())) {
    for (const StandardTableau& tableau : standard_tableaux(lambda)) {
      auto start = std::chrono::steady_clock::now();
      HeckeElement<Rational> fused = fused_idempotent_given_psi(psi_element, lambda, tableau);
      auto stop = std::chrono::steady_clock::now();
      HeckeElement<Rational> inductive = jm_idempotent(alg, lambda, tableau);
      FusionComparison cmp{lambda, tableau, fused == inductive,
                           std::chrono::duration<double, std::milli>(stop - start).count()};
      out.push_back(std::move(cmp));
    }
  }
  return out;
}

}  // namespace rsf
