#include "doctest.h"

#include "rsf/fraction.hpp"
#include "rsf/fusion.hpp"
#include "rsf/hecke.hpp"
#include "rsf/partition.hpp"
#include "rsf/tableau.hpp"

#include <stdexcept>
#include <vector>

using namespace rsf;

namespace {

FactoredFraction over(MultiPoly num, LinearFactor f) {
  return FactoredFraction(std::move(num), {f});
}

}  // namespace

TEST_CASE("baxterized generator at numeric points") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(2, p);
  // T_1(x, y) = s T_1 + (s - r) x/(y - x); at x=1, y=4 the scalar is 1/3.
  auto b = baxterized(alg, 1, SpectralArg::number(Rational(1)), SpectralArg::number(Rational(4)));
  auto t = lift_to_fractions(he_gen<Rational>(alg, 1)).scaled(Rational(3));
  auto expected = t + lift_to_fractions(he_one<Rational>(alg)).scaled(Rational(1) / 3);
  CHECK(b == expected);
  // Coincident numeric arguments are a pole.
  CHECK_THROWS_AS(
      baxterized(alg, 1, SpectralArg::number(Rational(2)), SpectralArg::number(Rational(2))),
      SingularPoint);
}

TEST_CASE("baxterized braid identity with symbolic spectra") {
  // T_1(u1,u2) T_2(u1,u3) T_1(u2,u3) = T_2(u2,u3) T_1(u1,u3) T_2(u1,u2):
  // the fraction arithmetic has to verify this identically in u1, u2, u3.
  for (const Params& p : {Params(Rational(2), Rational(3)),
                          Params(Rational(1) / 2, Rational(5))}) {
    HeckeAlgebra alg(3, p);
    auto u = [](int v) { return SpectralArg::variable(v); };
    auto lhs = he_mul(he_mul(baxterized(alg, 1, u(1), u(2)), baxterized(alg, 2, u(1), u(3))),
                      baxterized(alg, 1, u(2), u(3)));
    auto rhs = he_mul(he_mul(baxterized(alg, 2, u(2), u(3)), baxterized(alg, 1, u(1), u(3))),
                      baxterized(alg, 2, u(1), u(2)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("two-strand symbolic product in closed form") {
  // Psi for m = 2 is T_1(u1, u2) T_1^{-1}. Expanding at r=2, s=3:
  //   coefficient of 1:    (3 u2 - (7/2) u1) / (u2 - u1)
  //   coefficient of T_1:  (3/2) u1 / (u2 - u1)
  // (worked out by hand from T_1^{-1} = (s/r) T_1 + 1 - s/r).
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(2, p);
  auto e = psi(alg);
  const SymmetricGroup& g = alg.group();
  LinearFactor u2_minus_u1 = LinearFactor::symbolic(2, 1);

  MultiPoly id_num = MultiPoly::variable(2).scaled(Rational(3)) -
                     MultiPoly::variable(1).scaled(Rational(7) / 2);
  CHECK(e.coefficient(g.index_of_name("12")) == over(id_num, u2_minus_u1));

  MultiPoly t_num = MultiPoly::variable(1).scaled(Rational(3) / 2);
  CHECK(e.coefficient(g.index_of_name("21")) == over(t_num, u2_minus_u1));
}

TEST_CASE("consecutive substitution order is enforced") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(3, p);
  auto e = psi(alg);
  CHECK_THROWS_AS(substitute_consecutive(e, 2, Rational(1)), std::invalid_argument);
  auto e1 = substitute_consecutive(e, 1, Rational(1));
  CHECK_THROWS_AS(substitute_consecutive(e1, 3, Rational(4)), std::invalid_argument);
}

TEST_CASE("normalizing constant against independent closed forms") {
  // Direct elimination of the general formula for the three shapes of
  // weight <= 3 gives 1/(r+s), r/(s(r+s)) and r^3/((s+r)(s^2+rs+r^2) s^3).
  for (const Params& p : {Params(Rational(2), Rational(3)),
                          Params(Rational(1) / 2, Rational(5))}) {
    const Rational& r = p.r;
    const Rational& s = p.s;
    CHECK(f_const(p, Partition({2})) == 1 / (r + s));
    CHECK(f_const(p, Partition({1, 1})) == r / (s * (r + s)));
    CHECK(f_const(p, Partition({1, 1, 1})) ==
          r * r * r / ((s + r) * (s * s + r * s + r * r) * s * s * s));
    CHECK(f_const(p, Partition({2, 1})) == r / (s * s * (r * r + r * s + s * s)));
  }
  Params p23(Rational(2), Rational(3));
  CHECK(f_const(p23, Partition({2})) == Rational(1) / 5);
  CHECK(f_const(p23, Partition({1, 1})) == Rational(2) / 15);
  CHECK(f_const(p23, Partition({2, 1})) == Rational(2) / 171);
  CHECK(f_const(p23, Partition({1, 1, 1})) == Rational(8) / 2565);
}

TEST_CASE("fused idempotents equal the inductive ones everywhere") {
  for (int m = 2; m <= 4; ++m) {
    HeckeAlgebra alg(m, Params(Rational(2), Rational(3)));
    auto cached_psi = psi(alg);
    for (const Partition& lambda : partitions_of(m)) {
      for (const StandardTableau& t : standard_tableaux(lambda)) {
        INFO(lambda.to_text(), " ", t.to_text());
        auto fused = fused_idempotent_given_psi(cached_psi, lambda, t);
        CHECK(fused == jm_idempotent(alg, lambda, t));
      }
    }
  }
  // Second parameter point, smaller arity.
  for (int m = 2; m <= 3; ++m) {
    HeckeAlgebra alg(m, Params(Rational(1) / 2, Rational(5)));
    for (const Partition& lambda : partitions_of(m)) {
      for (const StandardTableau& t : standard_tableaux(lambda)) {
        CHECK(fused_idempotent(alg, lambda, t) == jm_idempotent(alg, lambda, t));
      }
    }
  }
}

TEST_CASE("batch comparison helper covers every tableau") {
  HeckeAlgebra alg(3, Params(Rational(2), Rational(3)));
  std::vector<FusionComparison> results = verify_fusion_equals_jm(alg);
  CHECK(results.size() == 4);  // tableaux of (3), (2,1) x2, (1,1,1)
  for (const FusionComparison& c : results) {
    INFO(c.lambda.to_text(), " ", c.tableau.to_text());
    CHECK(c.equal);
  }
  CHECK(results.front().lambda == Partition({3}));
  CHECK(results.back().lambda == Partition({1, 1, 1}));
}

TEST_CASE("pole cancellation is exact for every evaluation chain") {
  // Each substitution step divides out the vanishing denominator factors; a
  // NonzeroRemainder anywhere would mean the pole is not removable.
  for (int m = 2; m <= 4; ++m) {
    HeckeAlgebra alg(m, Params(Rational(2), Rational(3)));
    auto cached_psi = psi(alg);
    for (const Partition& lambda : partitions_of(m)) {
      for (const StandardTableau& t : standard_tableaux(lambda)) {
        CHECK_NOTHROW(fused_idempotent_given_psi(cached_psi, lambda, t));
      }
    }
  }
}
