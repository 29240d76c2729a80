#pragma once

#include "rsf/fraction.hpp"
#include "rsf/partition.hpp"
#include "rsf/permutation.hpp"
#include "rsf/rational.hpp"
#include "rsf/report.hpp"
#include "rsf/tableau.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace rsf {

// Coefficient-ring glue so one element kernel serves exact numbers and
// spectral-variable fractions alike.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static Rational from_rational(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational times_rational(const Rational& x, const Rational& c) { return x * c; }
};

template <>
struct CoeffOps<FactoredFraction> {
  static FactoredFraction from_rational(const Rational& x) { return FactoredFraction(x); }
  static bool is_zero(const FactoredFraction& x) { return x.is_zero(); }
  static FactoredFraction times_rational(const FactoredFraction& x, const Rational& c) {
    return x.scaled(c);
  }
};

// The deformed group algebra of S_m with quadratic relation
// (T_i - 1)(T_i + r/s) = 0 in the T_sigma basis.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int m, Params params)
      : m_(m), params_(std::move(params)), group_(&symmetric_group(m)) {}

  int arity() const { return m_; }
  const Params& params() const { return params_; }
  const SymmetricGroup& group() const { return *group_; }
  // q = r/s, the negated non-unit root of the quadratic relation.
  Rational quad_ratio() const { return params_.r_over_s(); }

  bool operator==(const HeckeAlgebra& o) const {
    return m_ == o.m_ && params_.r == o.params_.r && params_.s == o.params_.s;
  }

 private:
  int m_;
  Params params_;
  const SymmetricGroup* group_;
};

// Element in the T_sigma basis. Keys are group element indices in the
// algebra's SymmetricGroup; zero coefficients are never stored.
template <class C>
class HeckeElement {
 public:
  using Terms = std::map<std::uint32_t, C>;

  HeckeElement() = default;
  explicit HeckeElement(const HeckeAlgebra* alg) : alg_(alg) {}

  const HeckeAlgebra* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(std::uint32_t idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? CoeffOps<C>::from_rational(Rational(0)) : it->second;
  }

  void add_term(std::uint32_t idx, const C& c) {
    if (CoeffOps<C>::is_zero(c)) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(idx, c);
    } else {
      it->second = it->second + c;
      if (CoeffOps<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  HeckeElement operator+(const HeckeElement& o) const {
    check_same(o);
    HeckeElement out = *this;
    for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
    return out;
  }

  HeckeElement operator-(const HeckeElement& o) const {
    check_same(o);
    HeckeElement out = *this;
    for (const auto& [idx, c] : o.terms_)
      out.add_term(idx, CoeffOps<C>::times_rational(c, Rational(-1)));
    return out;
  }

  HeckeElement scaled(const Rational& c) const {
    HeckeElement out(alg_);
    if (c == 0) return out;
    for (const auto& [idx, coef] : terms_) out.add_term(idx, CoeffOps<C>::times_rational(coef, c));
    return out;
  }

  // Right multiplication by the generator T_i:
  //   T_sigma T_i = T_{sigma s_i}                         if the length goes up,
  //   T_sigma T_i = (1 - q) T_sigma + q T_{sigma s_i}     otherwise, q = r/s.
  HeckeElement right_mul_gen(int i) const {
    const SymmetricGroup& g = alg_->group();
    Rational q = alg_->quad_ratio();
    HeckeElement out(alg_);
    for (const auto& [idx, c] : terms_) {
      std::uint32_t nxt = g.right_gen(idx, i);
      if (g.length(nxt) > g.length(idx)) {
        out.add_term(nxt, c);
      } else {
        out.add_term(idx, CoeffOps<C>::times_rational(c, Rational(1) - q));
        out.add_term(nxt, CoeffOps<C>::times_rational(c, q));
      }
    }
    return out;
  }

  bool operator==(const HeckeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
  }

 private:
  void check_same(const HeckeElement& o) const {
    if (alg_ == nullptr || o.alg_ == nullptr || !(*alg_ == *o.alg_))
      throw std::invalid_argument("elements belong to different algebras");
  }
  const HeckeAlgebra* alg_ = nullptr;
  Terms terms_;
};

template <class C>
HeckeElement<C> he_zero(const HeckeAlgebra& alg) {
  return HeckeElement<C>(&alg);
}

template <class C>
HeckeElement<C> he_one(const HeckeAlgebra& alg) {
  HeckeElement<C> out(&alg);
  out.add_term(alg.group().identity_index(), CoeffOps<C>::from_rational(Rational(1)));
  return out;
}

template <class C>
HeckeElement<C> he_gen(const HeckeAlgebra& alg, int i) {
  HeckeElement<C> out(&alg);
  Permutation p = Permutation::identity(alg.arity()).right_multiplied(i);
  out.add_term(alg.group().index_of(p), CoeffOps<C>::from_rational(Rational(1)));
  return out;
}

// T_sigma along the canonical reduced word (independent of the word choice).
template <class C = Rational>
HeckeElement<C> t_word(const HeckeAlgebra& alg, std::uint32_t idx) {
  HeckeElement<C> out = he_one<C>(alg);
  for (int i : alg.group().reduced_word(idx)) out = out.right_mul_gen(i);
  return out;
}

template <class C = Rational>
HeckeElement<C> t_word(const HeckeAlgebra& alg, const Permutation& sigma) {
  return t_word<C>(alg, alg.group().index_of(sigma));
}

// Exact product: expand b over its basis elements and push a through the
// generator rule along canonical reduced words. Canonical words are closed
// under prefixes, so memoizing a*T_{prefix} costs one generator step per
// distinct group element touched.
template <class C>
HeckeElement<C> he_mul(const HeckeElement<C>& a, const HeckeElement<C>& b) {
  if (a.algebra() == nullptr || b.algebra() == nullptr || !(*a.algebra() == *b.algebra()))
    throw std::invalid_argument("elements belong to different algebras");
  const HeckeAlgebra& alg = *a.algebra();
  const SymmetricGroup& g = alg.group();
  HeckeElement<C> out(&alg);

  if constexpr (std::is_same_v<C, Rational>) {
    std::map<std::uint32_t, HeckeElement<C>> cache;
    cache.emplace(g.identity_index(), a);
    auto prefix_product = [&](auto&& self, std::uint32_t idx) -> const HeckeElement<C>& {
      auto it = cache.find(idx);
      if (it != cache.end()) return it->second;
      const auto& word = g.reduced_word(idx);
      int last = word.back();
      std::uint32_t parent = g.right_gen(idx, last);  // strip the final letter
      const HeckeElement<C>& base = self(self, parent);
      return cache.emplace(idx, base.right_mul_gen(last)).first->second;
    };
    for (const auto& [idx, c] : b.terms()) {
      const HeckeElement<C>& a_tau = prefix_product(prefix_product, idx);
      for (const auto& [sig, coef] : a_tau.terms()) out.add_term(sig, coef * c);
    }
  } else {
    for (const auto& [idx, c] : b.terms()) {
      HeckeElement<C> cur = a;
      for (int i : g.reduced_word(idx)) cur = cur.right_mul_gen(i);
      for (const auto& [sig, coef] : cur.terms()) out.add_term(sig, coef * c);
    }
  }
  return out;
}

template <class C>
HeckeElement<C> operator*(const HeckeElement<C>& a, const HeckeElement<C>& b) {
  return he_mul(a, b);
}

// Promote a numeric element into the fraction coefficient ring.
HeckeElement<FactoredFraction> lift_to_fractions(const HeckeElement<Rational>& a);

// T_i^{-1} = (s/r) T_i + (1 - s/r), forced by the quadratic relation.
HeckeElement<Rational> gen_inverse(const HeckeAlgebra& alg, int i);

// T_{w_k}: longest element of the subgroup on the first k strands.
HeckeElement<Rational> t_longest(const HeckeAlgebra& alg, int k);
HeckeElement<Rational> t_longest_inverse(const HeckeAlgebra& alg, int k);

// Jucys-Murphy elements: y_1 = 1, y_{k+1} = (s/r) T_k y_k T_k.
HeckeElement<Rational> jm(const HeckeAlgebra& alg, int k);

// Reinterpret an element of a smaller algebra (same parameters) inside alg,
// extending permutations by fixed points.
HeckeElement<Rational> embed(const HeckeAlgebra& alg, const HeckeElement<Rational>& small);

// Primitive idempotent by the inductive rule: E_T = E_U prod_i (y_m - rho_i)/(sigma - rho_i)
// over the addable corners of the shape of U other than the box holding m.
HeckeElement<Rational> jm_idempotent(const HeckeAlgebra& alg, const Partition& lambda,
                                     const StandardTableau& tableau);

// Structural identity suite: braid/commuting/quadratic relations, longest-element
// conjugation and square identities, Jucys-Murphy commutativity.
CheckReport hecke_relations_report(const HeckeAlgebra& alg);

}  // namespace rsf
