#pragma once

#include "rsf/hecke.hpp"
#include "rsf/linalg.hpp"
#include "rsf/linop.hpp"
#include "rsf/partition.hpp"
#include "rsf/qalgebra.hpp"
#include "rsf/report.hpp"
#include "rsf/tableau.hpp"
#include "rsf/tensor_space.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace rsf {

enum class IdempotentMethod { Inductive, Fused };

// Representation of the deformed symmetric-group algebra on V^(tensor m):
// T_i acts as the braid operator on slots i, i+1. Matrices of basis elements
// are built along canonical reduced words and cached, so repeated actions of
// many elements of the same algebra share the work.
class HeckeRep {
 public:
  HeckeRep(const HeckeAlgebra& alg, int n);

  int local_dim() const { return n_; }
  long dimension() const { return dim_; }
  const HeckeAlgebra& algebra() const { return *alg_; }

  const LinOp& t_matrix(std::uint32_t idx);
  LinOp action(const HeckeElement<Rational>& h);

 private:
  const HeckeAlgebra* alg_;
  int n_;
  long dim_;
  std::vector<LinOp> embedded_;  // braid operator on slots i, i+1
  std::map<std::uint32_t, LinOp> cache_;
};

// One-shot convenience: the matrix of h on V^(tensor m), m = arity of h.
LinOp hecke_action(const HeckeElement<Rational>& h, int n);

// For each letter content, the exact rank of the span's projection onto the
// words of that content. Hecke operators preserve letter content, so the
// image of a projector decomposes along these blocks and the projection
// ranks are its true weight multiplicities.
std::map<GlWeight, long> weight_multiplicities(const std::vector<Vec>& basis, int n, int m);

struct HighestWeightVector {
  Vec vector;
  GlWeight weight;
  // (omega_i, omega'_i) eigenvalue pairs determined by the weight.
  std::vector<std::pair<Rational, Rational>> eigenvalues;
};

// Exact basis of the joint kernel of all raising actions restricted to the
// span, one entry per kernel line, grouped by letter content. For the image
// of a primitive idempotent the list has exactly one entry.
std::vector<HighestWeightVector> highest_weight_vectors(const std::vector<Vec>& basis, int n,
                                                        int m, const Params& params);

// True iff op commutes with the coproduct action of every generator.
bool commutes_with_u_action(const LinOp& op, int n, int m, const Params& params);

struct ModuleFlags {
  bool rank_matches_prediction = false;
  bool weights_match_kostka = false;
  bool unique_highest_weight = false;
  bool highest_weight_matches_shape = false;
  bool eigenvalues_match = false;
  bool commutes_with_action = false;

  bool all_pass() const {
    return rank_matches_prediction && weights_match_kostka && unique_highest_weight &&
           highest_weight_matches_shape && eigenvalues_match && commutes_with_action;
  }
};

struct ModuleReport {
  Partition lambda;
  StandardTableau tableau;
  long rank = 0;
  long long predicted_dim = 0;
  std::map<GlWeight, long> weight_multiplicities;
  GlWeight highest_weight;  // empty when the image vanishes
  std::vector<std::pair<Rational, Rational>> hw_eigenvalues;
  ModuleFlags flags;
};

// Realize the module cut out by the primitive idempotent of (lambda, tableau)
// inside V^(tensor m) and check it against the combinatorial predictions:
// rank vs the hook-content dimension, weight multiplicities vs Kostka
// numbers, a unique highest-weight line whose eigenvalues match the weight
// formula, and equivariance of the projector.
ModuleReport module_of(const Partition& lambda, const StandardTableau& tableau, int n,
                       const Params& params,
                       IdempotentMethod method = IdempotentMethod::Inductive);

struct AuditReport {
  int n = 0;
  int m = 0;
  CheckReport checks;
  std::vector<ModuleReport> modules;

  bool all_pass() const;
};

// Full duality audit on V^(tensor m): completeness of dimensions, resolution
// of the identity, pairwise orthogonality of the projectors, per-module rank
// agreement, and the commutant-span dimension count.
AuditReport schur_weyl_audit(int n, int m, const Params& params,
                             IdempotentMethod method = IdempotentMethod::Inductive);

}  // namespace rsf
