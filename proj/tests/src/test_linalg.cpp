#include "doctest.h"

#include "rsf/linalg.hpp"
#include "rsf/linop.hpp"

#include <random>
#include <vector>

using namespace rsf;

namespace {

LinOp random_op(std::mt19937_64& rng, long rows, long cols, int fill_percent) {
  LinOp a(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      if (static_cast<int>(rng() % 100) < fill_percent)
        a.set(r, c, Rational(static_cast<long>(rng() % 9) - 4));
  return a;
}

Vec random_vec(std::mt19937_64& rng, long dim) {
  Vec v(static_cast<std::size_t>(dim), Rational(0));
  for (auto& x : v) x = Rational(static_cast<long>(rng() % 7) - 3);
  return v;
}

}  // namespace

TEST_CASE("echelon rows are the canonical reduced form") {
  // Span of (1,2,3) and (2,4,7) has RREF rows (1,2,0), (0,0,1).
  EchelonBasis b(3);
  CHECK(b.insert({Rational(1), Rational(2), Rational(3)}));
  CHECK(b.insert({Rational(2), Rational(4), Rational(7)}));
  CHECK(b.rank() == 2);
  CHECK(b.rows()[0] == Vec{Rational(1), Rational(2), Rational(0)});
  CHECK(b.rows()[1] == Vec{Rational(0), Rational(0), Rational(1)});
  CHECK(b.pivots() == std::vector<long>{0, 2});
  // Dependent vector is rejected.
  CHECK_FALSE(b.insert({Rational(3), Rational(6), Rational(10)}));
  CHECK(b.contains({Rational(5), Rational(10), Rational(-1)}));
  CHECK_FALSE(b.contains({Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("same span from different generating sets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    long dim = 5;
    std::vector<Vec> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_vec(rng, dim));
    // Second generating set: invertible rational recombinations.
    std::vector<Vec> mixed;
    mixed.push_back(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) {
      Vec v = gens[i];
      for (long c = 0; c < dim; ++c)
        v[static_cast<std::size_t>(c)] += gens[i - 1][static_cast<std::size_t>(c)] * 3;
      mixed.push_back(v);
    }
    std::swap(mixed[0], mixed[2]);
    EchelonBasis a = span_of(gens, dim);
    EchelonBasis b = span_of(mixed, dim);
    CHECK(a == b);
    CHECK(a.contains_subspace(b));
  }
}

TEST_CASE("rank nullity and the defining properties of image and kernel") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    long rows = 4 + static_cast<long>(rng() % 3);
    long cols = 4 + static_cast<long>(rng() % 3);
    LinOp a = random_op(rng, rows, cols, 40);

    std::vector<Vec> image = image_basis(a);
    std::vector<Vec> kernel = kernel_basis(a);
    CHECK(static_cast<long>(image.size()) == rank_of(a));
    CHECK(static_cast<long>(image.size() + kernel.size()) == cols);

    // Every kernel vector is annihilated.
    Vec zero(static_cast<std::size_t>(rows), Rational(0));
    for (const Vec& v : kernel) CHECK(a.apply(v) == zero);

    // Image vectors live in the column span, and span it.
    std::vector<Vec> columns;
    for (long c = 0; c < cols; ++c) {
      Vec col(static_cast<std::size_t>(rows), Rational(0));
      for (const auto& [r, val] : a.column(c)) col[static_cast<std::size_t>(r)] = val;
      columns.push_back(col);
    }
    CHECK(span_of(image, rows) == span_of(columns, rows));

    // Kernel vectors are independent by construction.
    CHECK(span_of(kernel, cols).rank() == static_cast<long>(kernel.size()));
  }
}

TEST_CASE("degenerate shapes") {
  LinOp zero(3, 3);
  CHECK(rank_of(zero) == 0);
  CHECK(image_basis(zero).empty());
  CHECK(kernel_basis(zero).size() == 3);
  CHECK(rank_of(LinOp::identity(4)) == 4);
  CHECK(kernel_basis(LinOp::identity(4)).empty());
  EchelonBasis empty(3);
  CHECK(empty.rank() == 0);
  CHECK_FALSE(empty.insert({Rational(0), Rational(0), Rational(0)}));
  CHECK(empty.contains({Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("operator arithmetic sanity") {
  std::mt19937_64 rng(31);
  LinOp a = random_op(rng, 4, 4, 50);
  LinOp b = random_op(rng, 4, 4, 50);
  Vec v = random_vec(rng, 4);
  CHECK((a * b).apply(v) == a.apply(b.apply(v)));
  CHECK((a + b).apply(v) == [&] {
    Vec sum = a.apply(v);
    Vec bv = b.apply(v);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += bv[i];
    return sum;
  }());
  CHECK(commutator(a, LinOp::identity(4)).is_zero());

  // Kronecker product on basis vectors: (a (x) b)(e_i (x) e_j).
  LinOp k = a.kron(b);
  CHECK(k.rows() == 16);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j)
      for (long r = 0; r < 4; ++r)
        for (long t = 0; t < 4; ++t)
          CHECK(k.at(4 * r + t, 4 * i + j) == a.at(r, i) * b.at(t, j));
}

TEST_CASE("pair embedding places the factor on adjacent slots") {
  std::mt19937_64 rng(37);
  LinOp op = random_op(rng, 4, 4, 60);  // n = 2, acts on V (x) V
  LinOp at1 = embed_pair_at(op, 1, 3, 2);
  LinOp at2 = embed_pair_at(op, 2, 3, 2);
  CHECK(at1 == op.kron(LinOp::identity(2)));
  CHECK(at2 == LinOp::identity(2).kron(op));
  // Distant embeddings commute.
  LinOp a1 = embed_pair_at(op, 1, 4, 2);
  LinOp a3 = embed_pair_at(op, 3, 4, 2);
  CHECK(commutator(a1, a3).is_zero());
}
