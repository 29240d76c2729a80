#include "rsf/schurweyl.hpp"

#include "rsf/fusion.hpp"

#include <stdexcept>
#include <string>

namespace rsf {

HeckeRep::HeckeRep(const HeckeAlgebra& alg, int n)
    : alg_(&alg), n_(n), dim_(TensorSpace(n, alg.arity()).dimension()) {
  LinOp braid = rcheck(n, alg.params());
  for (int i = 1; i < alg.arity(); ++i)
    embedded_.push_back(embed_pair_at(braid, i, alg.arity(), n));
  cache_.emplace(alg.group().identity_index(), LinOp::identity(dim_));
}

const LinOp& HeckeRep::t_matrix(std::uint32_t idx) {
  auto it = cache_.find(idx);
  if (it != cache_.end()) return it->second;
  const SymmetricGroup& g = alg_->group();
  int last = g.reduced_word(idx).back();
  std::uint32_t parent = g.right_gen(idx, last);  // strip the final letter
  LinOp mat = t_matrix(parent) * embedded_[static_cast<std::size_t>(last) - 1];
  return cache_.emplace(idx, std::move(mat)).first->second;
}

LinOp HeckeRep::action(const HeckeElement<Rational>& h) {
  if (h.algebra() == nullptr || !(*h.algebra() == *alg_))
    throw std::invalid_argument("element belongs to a different algebra");
  LinOp out(dim_, dim_);
  for (const auto& [idx, c] : h.terms()) out = out + t_matrix(idx).scaled(c);
  return out;
}

LinOp hecke_action(const HeckeElement<Rational>& h, int n) {
  if (h.algebra() == nullptr) throw std::invalid_argument("element has no algebra");
  HeckeRep rep(*h.algebra(), n);
  return rep.action(h);
}

namespace {

// Letter content of a vector's support; rejects mixed-content vectors.
GlWeight content_of(const Vec& v, const TensorSpace& space) {
  GlWeight content;
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] == 0) continue;
    GlWeight c = space.letter_content(static_cast<long>(w));
    if (content.empty()) {
      content = std::move(c);
    } else if (c != content) {
      throw std::invalid_argument("vector mixes letter contents");
    }
  }
  return content;
}

std::vector<GlWeight> compositions_of(int m, int n) {
  std::vector<GlWeight> out;
  GlWeight cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      cur[static_cast<std::size_t>(pos)] = take;
      self(self, pos + 1, left - take);
    }
  };
  rec(rec, 0, m);
  return out;
}

Vec flattened(const LinOp& op) {
  Vec out(static_cast<std::size_t>(op.rows() * op.cols()), Rational(0));
  for (long c = 0; c < op.cols(); ++c)
    for (const auto& [r, v] : op.column(c))
      out[static_cast<std::size_t>(c * op.rows() + r)] = v;
  return out;
}

std::vector<std::pair<Gen, int>> generator_list(int n) {
  std::vector<std::pair<Gen, int>> out;
  for (int i = 1; i < n; ++i) {
    for (Gen g : {Gen::E, Gen::F, Gen::Omega, Gen::OmegaInv, Gen::OmegaPrime, Gen::OmegaPrimeInv})
      out.emplace_back(g, i);
  }
  return out;
}

}  // namespace

std::map<GlWeight, long> weight_multiplicities(const std::vector<Vec>& basis, int n, int m) {
  TensorSpace space(n, m);
  long dim = space.dimension();
  std::map<GlWeight, std::vector<long>> blocks;  // content -> word indices
  for (long w = 0; w < dim; ++w) blocks[space.letter_content(w)].push_back(w);

  std::map<GlWeight, long> out;
  for (const auto& [content, words] : blocks) {
    EchelonBasis block(static_cast<long>(words.size()));
    for (const Vec& v : basis) {
      if (v.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("basis vector has the wrong dimension");
      Vec local(words.size(), Rational(0));
      for (std::size_t j = 0; j < words.size(); ++j)
        local[j] = v[static_cast<std::size_t>(words[j])];
      block.insert(std::move(local));
    }
    if (block.rank() > 0) out[content] = block.rank();
  }
  return out;
}

std::vector<HighestWeightVector> highest_weight_vectors(const std::vector<Vec>& basis, int n,
                                                        int m, const Params& params) {
  TensorSpace space(n, m);
  long dim = space.dimension();

  // Group the basis by letter content; raising operators shift contents, so
  // the joint kernel splits across these groups.
  std::map<GlWeight, std::vector<const Vec*>> groups;
  std::vector<GlWeight> order;  // first-seen order, deterministic
  for (const Vec& v : basis) {
    if (v.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("basis vector has the wrong dimension");
    GlWeight content = content_of(v, space);
    if (content.empty()) continue;  // zero vector contributes nothing
    auto [it, fresh] = groups.try_emplace(content);
    if (fresh) order.push_back(content);
    it->second.push_back(&v);
  }

  std::vector<LinOp> raising;
  for (int i = 1; i < n; ++i) raising.push_back(coproduct_action(Gen::E, i, n, m, params));

  std::vector<HighestWeightVector> out;
  for (const GlWeight& content : order) {
    const std::vector<const Vec*>& block = groups[content];
    long k = static_cast<long>(block.size());
    LinOp stacked(static_cast<long>(raising.size()) * dim, k);
    for (long j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < raising.size(); ++i) {
        Vec img = raising[i].apply(*block[static_cast<std::size_t>(j)]);
        for (long w = 0; w < dim; ++w) {
          if (img[static_cast<std::size_t>(w)] == 0) continue;
          stacked.set(static_cast<long>(i) * dim + w, j, img[static_cast<std::size_t>(w)]);
        }
      }
    }
    for (const Vec& coeffs : kernel_basis(stacked)) {
      Vec v(static_cast<std::size_t>(dim), Rational(0));
      for (long j = 0; j < k; ++j) {
        if (coeffs[static_cast<std::size_t>(j)] == 0) continue;
        const Vec& b = *block[static_cast<std::size_t>(j)];
        for (std::size_t w = 0; w < b.size(); ++w)
          v[w] += coeffs[static_cast<std::size_t>(j)] * b[w];
      }
      out.push_back({std::move(v), content, weight_eigenvalues(content, params)});
    }
  }
  return out;
}

bool commutes_with_u_action(const LinOp& op, int n, int m, const Params& params) {
  for (const auto& [g, i] : generator_list(n)) {
    if (!commutator(op, coproduct_action(g, i, n, m, params)).is_zero()) return false;
  }
  return true;
}

namespace {

ModuleReport report_from_action(const Partition& lambda, const StandardTableau& tableau, int n,
                                const Params& params, const LinOp& rho) {
  int m = lambda.weight();
  std::vector<Vec> image = image_basis(rho);
  long rank = static_cast<long>(image.size());
  long long predicted = hook_content_dim(lambda, n);

  std::map<GlWeight, long> mults = weight_multiplicities(image, n, m);
  bool kostka_ok = true;
  for (const GlWeight& mu : compositions_of(m, n)) {
    long long expected = kostka_number(lambda, mu);
    auto it = mults.find(mu);
    long long have = it == mults.end() ? 0 : it->second;
    if (have != expected) kostka_ok = false;
  }

  std::vector<HighestWeightVector> hws = highest_weight_vectors(image, n, m, params);

  GlWeight padded;
  if (lambda.length() <= n) {
    padded = GlWeight(lambda.parts().begin(), lambda.parts().end());
    padded.resize(static_cast<std::size_t>(n), 0);
  }

  ModuleFlags flags;
  flags.rank_matches_prediction = rank == predicted;
  flags.weights_match_kostka = kostka_ok;
  flags.unique_highest_weight = rank == 0 ? hws.empty() : hws.size() == 1;
  flags.highest_weight_matches_shape =
      rank == 0 ? hws.empty() : (hws.size() == 1 && hws[0].weight == padded);

  // Eigenvalue check against the actual diagonal action, not just the
  // formula applied to the computed weight.
  bool eig_ok = true;
  if (rank > 0) {
    if (hws.size() != 1) {
      eig_ok = false;
    } else {
      const Vec& v = hws[0].vector;
      for (int i = 1; i < n; ++i) {
        const auto& [w_eig, wp_eig] = hws[0].eigenvalues[static_cast<std::size_t>(i) - 1];
        Vec wv = coproduct_action(Gen::Omega, i, n, m, params).apply(v);
        Vec wpv = coproduct_action(Gen::OmegaPrime, i, n, m, params).apply(v);
        for (std::size_t w = 0; w < v.size(); ++w) {
          if (wv[w] != w_eig * v[w] || wpv[w] != wp_eig * v[w]) eig_ok = false;
        }
      }
    }
  }
  flags.eigenvalues_match = eig_ok;
  flags.commutes_with_action = commutes_with_u_action(rho, n, m, params);

  ModuleReport report{lambda,
                      tableau,
                      rank,
                      predicted,
                      std::move(mults),
                      rank > 0 && hws.size() == 1 ? hws[0].weight : GlWeight{},
                      rank > 0 && hws.size() == 1
                          ? hws[0].eigenvalues
                          : std::vector<std::pair<Rational, Rational>>{},
                      flags};
  return report;
}

HeckeElement<Rational> idempotent_by(const HeckeAlgebra& alg, const Partition& lambda,
                                     const StandardTableau& tableau, IdempotentMethod method) {
  return method == IdempotentMethod::Fused ? fused_idempotent(alg, lambda, tableau)
                                           : jm_idempotent(alg, lambda, tableau);
}

}  // namespace

ModuleReport module_of(const Partition& lambda, const StandardTableau& tableau, int n,
                       const Params& params, IdempotentMethod method) {
  if (!(tableau.shape() == lambda))
    throw std::invalid_argument("tableau shape does not match the partition");
  HeckeAlgebra alg(lambda.weight(), params);
  HeckeElement<Rational> e = idempotent_by(alg, lambda, tableau, method);
  return report_from_action(lambda, tableau, n, params, hecke_action(e, n));
}

bool AuditReport::all_pass() const {
  if (!checks.all_pass()) return false;
  for (const ModuleReport& r : modules)
    if (!r.flags.all_pass()) return false;
  return true;
}

AuditReport schur_weyl_audit(int n, int m, const Params& params, IdempotentMethod method) {
  if (n < 2 || m < 1) throw std::invalid_argument("schur_weyl_audit needs n >= 2, m >= 1");
  AuditReport audit;
  audit.n = n;
  audit.m = m;

  HeckeAlgebra alg(m, params);
  HeckeRep rep(alg, n);
  long dim = rep.dimension();

  std::vector<LinOp> actions;
  long long dimension_sum = 0;
  for (const Partition& lambda : partitions_of(m)) {
    std::vector<StandardTableau> tabs = standard_tableaux(lambda);
    dimension_sum +=
        static_cast<long long>(tabs.size()) * hook_content_dim(lambda, n);
    for (const StandardTableau& t : tabs) {
      LinOp rho = rep.action(idempotent_by(alg, lambda, t, method));
      audit.modules.push_back(report_from_action(lambda, t, n, params, rho));
      actions.push_back(std::move(rho));
    }
  }

  audit.checks.add("dimension count: sum of tableau-weighted module dimensions = n^m",
                   dimension_sum == dim);

  {
    LinOp total(dim, dim);
    for (const LinOp& a : actions) total = total + a;
    audit.checks.add("resolution of identity: projectors sum to Id", total == LinOp::identity(dim));
  }

  {
    bool ok = true;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      for (std::size_t b = 0; b < actions.size(); ++b) {
        LinOp prod = actions[a] * actions[b];
        if (a == b ? !(prod == actions[a]) : !prod.is_zero()) ok = false;
      }
    }
    audit.checks.add("orthogonality: distinct projectors multiply to zero", ok);
  }

  {
    bool ok = true;
    for (const ModuleReport& r : audit.modules)
      if (!r.flags.rank_matches_prediction) ok = false;
    audit.checks.add("module ranks match hook-content dimensions", ok);
  }

  {
    EchelonBasis span(dim * dim);
    for (std::uint32_t idx = 0; idx < alg.group().order(); ++idx)
      span.insert(flattened(rep.t_matrix(idx)));
    long long expected = 0;
    for (const Partition& lambda : partitions_of(m)) {
      if (lambda.length() > n) continue;
      long long f = static_cast<long long>(standard_tableaux(lambda).size());
      expected += f * f;
    }
    bool ok = span.rank() == expected;
    if (n >= m) {
      long long factorial = 1;
      for (int k = 2; k <= m; ++k) factorial *= k;
      ok = ok && expected == factorial;
    }
    audit.checks.add("commutant span dimension matches the squared-count formula", ok);
  }

  {
    bool ok = true;
    for (const ModuleReport& r : audit.modules)
      if (!r.flags.all_pass()) ok = false;
    audit.checks.add("every module report passes all flags", ok);
  }

  return audit;
}

}  // namespace rsf
