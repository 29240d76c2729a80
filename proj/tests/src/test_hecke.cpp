#include "doctest.h"

#include "rsf/hecke.hpp"
#include "rsf/partition.hpp"
#include "rsf/rational.hpp"
#include "rsf/tableau.hpp"

#include <cstdint>
#include <string>
#include <vector>

using namespace rsf;

namespace {

using El = HeckeElement<Rational>;

El t_from_word(const HeckeAlgebra& alg, const std::vector<int>& word) {
  El out = he_one<Rational>(alg);
  for (int i : word) out = out.right_mul_gen(i);
  return out;
}

Rational coeff(const El& e, const std::string& name) {
  return e.coefficient(e.algebra()->group().index_of_name(name));
}

}  // namespace

TEST_CASE("structural relation suite passes at several parameter points") {
  for (const Params& p : {Params(Rational(2), Rational(3)),
                          Params(Rational(1) / 2, Rational(5))}) {
    for (int m = 2; m <= 4; ++m) {
      HeckeAlgebra alg(m, p);
      CheckReport report = hecke_relations_report(alg);
      for (const CheckItem& item : report.items) {
        INFO(item.name);
        CHECK(item.pass);
      }
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("braid-equivalent words give the same element") {
  HeckeAlgebra alg(3, Params(Rational(2), Rational(3)));
  CHECK(t_from_word(alg, {1, 2, 1}) == t_from_word(alg, {2, 1, 2}));
  HeckeAlgebra alg4(4, Params(Rational(5), Rational(-2)));
  CHECK(t_from_word(alg4, {1, 3}) == t_from_word(alg4, {3, 1}));
  CHECK(t_from_word(alg4, {2, 3, 2}) == t_from_word(alg4, {3, 2, 3}));
}

TEST_CASE("quadratic relation in product form") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(2, p);
  El t1 = he_gen<Rational>(alg, 1);
  El lhs = he_mul(t1, t1);
  // T^2 = (1 - r/s) T + (r/s) 1.
  El rhs = t1.scaled(Rational(1) - p.r_over_s()) + he_one<Rational>(alg).scaled(p.r_over_s());
  CHECK(lhs == rhs);
  // Same thing as (T - 1)(T + r/s) = 0.
  El zero = he_mul(t1 - he_one<Rational>(alg),
                   t1 + he_one<Rational>(alg).scaled(p.r_over_s()));
  CHECK(zero.is_zero());
}

TEST_CASE("known product beyond the length-additive regime") {
  // (T_1 T_2 T_1) T_2 = (1 - r/s) T_{321} + (r/s) T_{312}: the long element
  // absorbs one more generator through the quadratic rule.
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(3, p);
  El w0 = t_from_word(alg, {1, 2, 1});
  El prod = w0.right_mul_gen(2);
  El expected = he_zero<Rational>(alg);
  expected.add_term(alg.group().index_of_name("321"), Rational(1) - p.r_over_s());
  expected.add_term(alg.group().index_of_name("312"), p.r_over_s());
  CHECK(prod == expected);
}

TEST_CASE("generator inverses from both sides") {
  for (const Params& p : {Params(Rational(2), Rational(3)),
                          Params(Rational(-3), Rational(7))}) {
    HeckeAlgebra alg(4, p);
    for (int i = 1; i <= 3; ++i) {
      El t = he_gen<Rational>(alg, i);
      El inv = gen_inverse(alg, i);
      CHECK(he_mul(t, inv) == he_one<Rational>(alg));
      CHECK(he_mul(inv, t) == he_one<Rational>(alg));
    }
    for (int k = 1; k <= 4; ++k) {
      CHECK(he_mul(t_longest(alg, k), t_longest_inverse(alg, k)) == he_one<Rational>(alg));
    }
  }
}

TEST_CASE("embedding a smaller algebra is multiplicative") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra small(2, p);
  HeckeAlgebra big(4, p);
  CHECK(embed(big, he_gen<Rational>(small, 1)) == he_gen<Rational>(big, 1));
  El prod_small = he_mul(he_gen<Rational>(small, 1), he_gen<Rational>(small, 1));
  CHECK(embed(big, prod_small) ==
        he_mul(he_gen<Rational>(big, 1), he_gen<Rational>(big, 1)));
}

TEST_CASE("first Jucys-Murphy elements in closed form") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(3, p);
  CHECK(jm(alg, 1) == he_one<Rational>(alg));
  // y_2 = (s/r) T_1^2 = (s/r - 1) T_1 + 1.
  El y2 = jm(alg, 2);
  El expected = he_gen<Rational>(alg, 1).scaled(p.s_over_r() - 1) + he_one<Rational>(alg);
  CHECK(y2 == expected);
  // The family commutes.
  El y3 = jm(alg, 3);
  CHECK(he_mul(y2, y3) == he_mul(y3, y2));
}

TEST_CASE("idempotents diagonalize the Jucys-Murphy family") {
  // y_k E_T = (s/r)^{content of the box holding k} E_T: this pins down every
  // E_T uniquely, so it is the strongest available oracle for the inductive
  // construction.
  for (const Params& p : {Params(Rational(2), Rational(3)),
                          Params(Rational(1) / 2, Rational(5))}) {
    for (int m = 2; m <= 4; ++m) {
      HeckeAlgebra alg(m, p);
      for (const Partition& lambda : partitions_of(m)) {
        for (const StandardTableau& t : standard_tableaux(lambda)) {
          El e = jm_idempotent(alg, lambda, t);
          std::vector<int> contents = t.content_exponents();
          for (int k = 1; k <= m; ++k) {
            Rational eig = p.content_value(contents[static_cast<std::size_t>(k) - 1]);
            CHECK(he_mul(jm(alg, k), e) == e.scaled(eig));
            CHECK(he_mul(e, jm(alg, k)) == e.scaled(eig));
          }
        }
      }
    }
  }
}

TEST_CASE("full twist square in terms of the Jucys-Murphy product") {
  // T_{w_k}^2 = (r/s)^{binom(k,2)} y_1 ... y_k. The exponent is the length
  // of w_k; the linear variant k-1 must fail from k = 3 on.
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(4, p);
  for (int k = 1; k <= 4; ++k) {
    El tw = t_longest(alg, k);
    El square = he_mul(tw, tw);
    El ys = he_one<Rational>(alg);
    for (int j = 1; j <= k; ++j) ys = he_mul(ys, jm(alg, j));
    long choose2 = static_cast<long>(k) * (k - 1) / 2;
    CHECK(square == ys.scaled(rational_pow(p.r_over_s(), choose2)));
    if (k >= 3) CHECK_FALSE(square == ys.scaled(rational_pow(p.r_over_s(), k - 1)));
  }
}

TEST_CASE("frozen idempotent tables at r=2, s=3") {
  Params p(Rational(2), Rational(3));
  {
    HeckeAlgebra alg(2, p);
    El row = jm_idempotent(alg, Partition({2}), *StandardTableau::parse("1,2"));
    CHECK(coeff(row, "12") == Rational(2) / 5);
    CHECK(coeff(row, "21") == Rational(3) / 5);
    El col = jm_idempotent(alg, Partition({1, 1}), *StandardTableau::parse("1;2"));
    CHECK(coeff(col, "12") == Rational(3) / 5);
    CHECK(coeff(col, "21") == Rational(-3) / 5);
    CHECK(row + col == he_one<Rational>(alg));
  }
  {
    HeckeAlgebra alg(3, p);
    El e = jm_idempotent(alg, Partition({1, 1, 1}), *StandardTableau::parse("1;2;3"));
    Rational c = Rational(27) / 95;
    CHECK(coeff(e, "123") == c);
    CHECK(coeff(e, "213") == -c);
    CHECK(coeff(e, "132") == -c);
    CHECK(coeff(e, "231") == c);
    CHECK(coeff(e, "312") == c);
    CHECK(coeff(e, "321") == -c);
  }
}

TEST_CASE("idempotency, orthogonality, resolution of identity") {
  for (int m = 2; m <= 4; ++m) {
    HeckeAlgebra alg(m, Params(Rational(2), Rational(3)));
    std::vector<El> all;
    for (const Partition& lambda : partitions_of(m))
      for (const StandardTableau& t : standard_tableaux(lambda))
        all.push_back(jm_idempotent(alg, lambda, t));
    El sum = he_zero<Rational>(alg);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(he_mul(all[i], all[i]) == all[i]);
      sum = sum + all[i];
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        CHECK(he_mul(all[i], all[j]).is_zero());
        CHECK(he_mul(all[j], all[i]).is_zero());
      }
    }
    CHECK(sum == he_one<Rational>(alg));
  }
}
