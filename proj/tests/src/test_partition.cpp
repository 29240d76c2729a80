#include "doctest.h"

#include "rsf/partition.hpp"
#include "rsf/tableau.hpp"

#include <algorithm>
#include <vector>

using namespace rsf;

namespace {

long long factorial(int m) {
  long long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

// Enumerates every composition of m into exactly n parts >= 0.
void compositions(int m, int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= m; ++first) {
    prefix.push_back(first);
    compositions(m - first, n - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("partition counts and enumeration order") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int m = 1; m <= 9; ++m) {
    std::vector<Partition> all = partitions_of(m);
    CHECK(static_cast<int>(all.size()) == expected[m]);
    CHECK(all.front() == Partition(std::vector<int>{m}));
    CHECK(all.back() == Partition(std::vector<int>(static_cast<std::size_t>(m), 1)));
    for (const Partition& p : all) CHECK(p.weight() == m);
    // Strictly decreasing in the chosen order => no duplicates.
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i + 1] < all[i]);
  }
}

TEST_CASE("conjugation is an involution") {
  for (int m = 1; m <= 7; ++m) {
    for (const Partition& p : partitions_of(m)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().weight() == m);
    }
  }
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
}

TEST_CASE("b statistic matches the row-index moment of the partition itself") {
  // sum_i binom(conj_i, 2) counts pairs of cells stacked in one column,
  // which is also sum_i (i-1) * lambda_i.
  for (int m = 1; m <= 8; ++m) {
    for (const Partition& p : partitions_of(m)) {
      long long moment = 0;
      for (int i = 1; i <= p.length(); ++i) moment += static_cast<long long>(i - 1) * p.part(i);
      CHECK(p.b_stat() == moment);
    }
  }
  CHECK(Partition({1, 1, 1}).b_stat() == 3);
  CHECK(Partition({3}).b_stat() == 0);
}

TEST_CASE("hooks and the tableau-count formula") {
  Partition p({2, 1});
  std::vector<std::pair<Cell, int>> h = p.hooks();
  REQUIRE(h.size() == 3);
  CHECK(h[0].second == 3);  // (1,1)
  CHECK(h[1].second == 1);  // (1,2)
  CHECK(h[2].second == 1);  // (2,1)

  for (int m = 1; m <= 6; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      long long prod = 1;
      for (const auto& [cell, len] : lambda.hooks()) prod *= len;
      long long by_formula = factorial(m) / prod;
      CHECK(by_formula == static_cast<long long>(standard_tableaux(lambda).size()));
    }
  }
}

TEST_CASE("hook content dimensions") {
  CHECK(hook_content_dim(Partition({2, 1}), 3) == 8);
  CHECK(hook_content_dim(Partition({2}), 2) == 3);
  CHECK(hook_content_dim(Partition({1, 1}), 2) == 1);
  CHECK(hook_content_dim(Partition({1, 1, 1}), 2) == 0);  // too many rows
  CHECK(hook_content_dim(Partition({3, 2}), 4) == 60);
}

TEST_CASE("hook content dimension equals the Kostka mass") {
  // dim = number of semistandard fillings = sum over compositions of the
  // Kostka numbers. Independent of the hook-content product formula.
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const Partition& lambda : partitions_of(m)) {
        std::vector<std::vector<int>> mus;
        std::vector<int> prefix;
        compositions(m, n, prefix, mus);
        long long total = 0;
        for (const auto& mu : mus) total += kostka_number(lambda, mu);
        CHECK(total == hook_content_dim(lambda, n));
      }
    }
  }
}

TEST_CASE("Kostka special values") {
  CHECK(kostka_number(Partition({2, 1}), {2, 1}) == 1);
  CHECK(kostka_number(Partition({2, 1}), {1, 1, 1}) == 2);
  CHECK(kostka_number(Partition({1, 1}), {2, 0}) == 0);
  CHECK(kostka_number(Partition({3}), {1, 1, 1}) == 1);
  // Invariance under permuting the content.
  CHECK(kostka_number(Partition({3, 1}), {2, 1, 1}) ==
        kostka_number(Partition({3, 1}), {1, 2, 1}));
  CHECK(kostka_number(Partition({3, 1}), {2, 1, 1}) ==
        kostka_number(Partition({3, 1}), {1, 1, 2}));
}

TEST_CASE("addable cells and growth") {
  Partition p({2, 1});
  std::vector<Cell> add = p.addable_cells();
  REQUIRE(add.size() == 3);
  CHECK(add[0] == Cell{1, 3});
  CHECK(add[1] == Cell{2, 2});
  CHECK(add[2] == Cell{3, 1});
  CHECK(p.with_cell_added(add[1]) == Partition({2, 2}));
  CHECK(p.with_cell_added(add[2]) == Partition({2, 1, 1}));
  CHECK(p.with_cell_removed(Cell{1, 2}) == Partition({1, 1}));
  CHECK(Cell{2, 4}.content() == 2);
}

TEST_CASE("partition text round trip") {
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& p : partitions_of(m)) {
      std::optional<Partition> back = Partition::parse(p.to_text());
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
  }
  CHECK(Partition::parse("")->empty());
  CHECK_FALSE(Partition::parse("1,2").has_value());    // increasing
  CHECK_FALSE(Partition::parse("3,0").has_value());    // zero part
  CHECK_FALSE(Partition::parse("2,,1").has_value());
  CHECK_FALSE(Partition::parse("a").has_value());
  CHECK_FALSE(Partition::parse("3,-1").has_value());
}
