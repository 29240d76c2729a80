#pragma once

#include "rsf/hecke.hpp"

#include <vector>

namespace rsf {

// Spectral argument of a Baxterized generator: a live variable u_var
// (var >= 1) or a fixed rational value (var == 0).
struct SpectralArg {
  int var = 0;
  Rational value = Rational(0);

  static SpectralArg variable(int v) { return SpectralArg{v, Rational(0)}; }
  static SpectralArg number(Rational x) { return SpectralArg{0, std::move(x)}; }
  bool is_symbolic() const { return var != 0; }
};

// T_i(x, y) = s T_i + (s - r) x / (y - x), with the scalar kept in the
// factored catalog (numerator times an optional single binomial factor).
// Throws SingularPoint when both arguments are numeric and equal.
HeckeElement<FactoredFraction> baxterized(const HeckeAlgebra& alg, int i, const SpectralArg& x,
                                          const SpectralArg& y);

// The full symbolic product
//   Psi(u_1..u_m) = prod_{k=1}^{m-1} [T_k(u_1,u_{k+1}) T_{k-1}(u_2,u_{k+1}) ... T_1(u_k,u_{k+1})]
//                   * T_{w_m}^{-1},
// factors multiplied left to right in increasing k.
HeckeElement<FactoredFraction> psi(const HeckeAlgebra& alg);

// Substitute u_var := value in every coefficient (consecutive order: u_var
// must be the lowest live variable). Cancels poles exactly; drops terms whose
// coefficient collapses to zero.
HeckeElement<FactoredFraction> substitute_consecutive(const HeckeElement<FactoredFraction>& e,
                                                      int var, const Rational& value);

// Demote a fully evaluated element (all coefficients constant) to Rational.
HeckeElement<Rational> to_rational_element(const HeckeElement<FactoredFraction>& e);

// The normalizing scalar f(lambda) =
//   (s/r)^{b(lambda')} s^{-C(m,2)} (1 - s/r)^m prod_cells (1 - (s/r)^{hook})^{-1}.
Rational f_const(const Params& params, const Partition& lambda);

// E_T by consecutive evaluation of f(lambda) * Psi at u_k = (s/r)^{content of k}.
HeckeElement<Rational> fused_idempotent(const HeckeAlgebra& alg, const Partition& lambda,
                                        const StandardTableau& tableau);
// Same, reusing an already-built Psi for the algebra.
HeckeElement<Rational> fused_idempotent_given_psi(const HeckeElement<FactoredFraction>& psi_element,
                                                  const Partition& lambda,
                                                  const StandardTableau& tableau);

struct FusionComparison {
  Partition lambda;
  StandardTableau tableau;
  bool equal = false;
  double millis = 0.0;  // wall time of the fused evaluation
};

// For every partition of the arity and every standard tableau: compare the
// fused idempotent against the inductive one, in deterministic order.
std::vector<FusionComparison> verify_fusion_equals_jm(const HeckeAlgebra& alg);

}  // namespace rsf
