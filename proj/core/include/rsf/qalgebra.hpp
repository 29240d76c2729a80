#pragma once

#include "rsf/linalg.hpp"
#include "rsf/linop.hpp"
#include "rsf/rational.hpp"
#include "rsf/report.hpp"
#include "rsf/tensor_space.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rsf {

enum class Gen { E, F, Omega, OmegaInv, OmegaPrime, OmegaPrimeInv };

// Generator matrices on the defining module V = Q^n:
//   e_j = E_{j,j+1},  f_j = E_{j+1,j},
//   omega_j       = r E_jj + s E_{j+1,j+1} + sum_{k != j,j+1} E_kk,
//   omega_prime_j = s E_jj + r E_{j+1,j+1} + sum_{k != j,j+1} E_kk.
struct DefiningRep {
  int n = 0;
  Params params;
  std::vector<LinOp> e, f, omega, omega_inv, omega_prime, omega_prime_inv;  // index j-1

  const LinOp& gen(Gen g, int j) const;
};

DefiningRep defining_rep(int n, const Params& params);

// Action of a generator on V^(tensor m) through the iterated comultiplication
//   D(e_i) = e_i (x) 1 + omega_i (x) e_i,
//   D(f_i) = f_i (x) omega_prime_i + 1 (x) f_i,
//   omegas group-like.
LinOp coproduct_action(Gen g, int i, int n, int m, const Params& params);

// Eigenvalues (omega_i value, omega_prime_i value) for i = 1..n-1 on a weight
// vector of the given letter content mu:
//   omega_i -> r^{mu_i} s^{mu_{i+1}},  omega_prime_i -> s^{mu_i} r^{mu_{i+1}}.
std::vector<std::pair<Rational, Rational>> weight_eigenvalues(const GlWeight& mu,
                                                              const Params& params);

// Constant braiding on V (x) V (basis-ordered as TensorSpace(n, 2)):
//   Rcheck = sum_i E_ii (x) E_ii + r sum_{i<j} E_ji (x) E_ij
//          + s^{-1} sum_{i<j} E_ij (x) E_ji + (1 - r s^{-1}) sum_{i<j} E_jj (x) E_ii.
LinOp rcheck(int n, const Params& params);

// One-variable spectral form:
//   Rcheck(z) = (1 - z r/s) sum E_ii (x) E_ii
//             + (1 - z)(r sum_{i>j} + s^{-1} sum_{i<j}) E_ij (x) E_ji
//             + z (1 - r/s) sum_{i<j} E_ii (x) E_jj + (1 - r/s) sum_{i>j} E_ii (x) E_jj.
// Rcheck(0) = Rcheck.
LinOp rcheck_z(int n, const Rational& z, const Params& params);

// Two-variable form, defined by s * y * Rcheck(x/y) / (y - x). Requires x != y, y != 0.
LinOp rcheck_xy(int n, const Rational& x, const Rational& y, const Params& params);

// Spanning sets of the two degree-2 submodules of V (x) V:
//   sym2:   v_i (x) v_i  and  v_i (x) v_j + s v_j (x) v_i (i < j),
//   wedge2: v_i (x) v_j - r v_j (x) v_i (i < j).
std::vector<Vec> sym2_basis(int n, const Params& params);
std::vector<Vec> wedge2_basis(int n, const Params& params);

// Dimension of the k-th fundamental module (image of the iterated
// antisymmetrizer inside V^(tensor k)); equals binomial(n, k).
long long fundamental_module_dim(int n, int k, const Params& params);

// Defining-representation relation suite: the full generator presentation
// (inverses, omega commutations, mixed commutators, distance >= 2 commuting,
// adjacent Serre identities for e and f), plus coproduct-level re-checks.
CheckReport relations_report(int n, const Params& params);

// R-matrix suite: quadratic relation of Rcheck, braid relation on three
// slots, z- and (x,y)-Yang-Baxter identities at sampled points, the
// degeneration Rcheck(0) = Rcheck, the one-parameter specialization r = q,
// s = q^{-1}, and intertwining with the coproduct action.
CheckReport rmatrix_report(int n, const Params& params, std::uint64_t seed, int trials);

// Submodule identification at the distinguished spectral points:
// image/kernel of Rcheck(1, s/r) and Rcheck(1, r/s) against sym2/wedge2.
CheckReport submodule_report(int n, const Params& params);

}  // namespace rsf
