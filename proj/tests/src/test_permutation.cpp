#include "doctest.h"

#include "rsf/permutation.hpp"

#include <algorithm>
#include <vector>

using namespace rsf;

namespace {

int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

}  // namespace

TEST_CASE("reduced words reproduce their permutation") {
  const SymmetricGroup& g = symmetric_group(4);
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    Permutation p = g.permutation(idx);
    std::vector<int> word = p.reduced_word();
    CHECK(static_cast<int>(word.size()) == p.length());
    CHECK(p.length() == inversions(p.one_line()));
    CHECK(Permutation::from_word(4, word) == p);
  }
}

TEST_CASE("canonical words are prefix closed") {
  // Every proper prefix of a canonical reduced word is itself the canonical
  // word of the permutation it multiplies out to. The Hecke product cache
  // leans on this.
  const SymmetricGroup& g = symmetric_group(5);
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    const std::vector<std::uint8_t>& word = g.reduced_word(idx);
    std::vector<int> prefix;
    for (std::uint8_t gen : word) {
      prefix.push_back(gen);
      Permutation q = Permutation::from_word(5, prefix);
      CHECK(q.reduced_word() == prefix);
    }
    if (!word.empty()) {
      // The parent (word minus its last letter) is one generator away.
      std::vector<int> parent(word.begin(), word.end() - 1);
      std::uint32_t parent_idx = g.index_of(Permutation::from_word(5, parent));
      CHECK(g.right_gen(parent_idx, word.back()) == idx);
      CHECK(g.length(parent_idx) + 1 == g.length(idx));
    }
  }
}

TEST_CASE("right multiplication swaps positions") {
  Permutation p(std::vector<int>{3, 1, 2});
  CHECK(p.right_multiplied(1) == Permutation(std::vector<int>{1, 3, 2}));
  CHECK(p.right_multiplied(2) == Permutation(std::vector<int>{3, 2, 1}));
  CHECK(p.inverse() == Permutation(std::vector<int>{2, 3, 1}));
  CHECK(Permutation::identity(4).length() == 0);
}

TEST_CASE("longest element of a prefix subgroup") {
  CHECK(Permutation::longest_in_prefix(5, 3) == Permutation(std::vector<int>{3, 2, 1, 4, 5}));
  CHECK(Permutation::longest_in_prefix(4, 4) == Permutation(std::vector<int>{4, 3, 2, 1}));
  CHECK(Permutation::longest_in_prefix(3, 1) == Permutation::identity(3));
  CHECK(Permutation::longest_in_prefix(5, 3).length() == 3);
  CHECK(Permutation::longest_in_prefix(4, 4).length() == 6);
}

TEST_CASE("group tables agree with direct permutation arithmetic") {
  for (int m = 2; m <= 5; ++m) {
    const SymmetricGroup& g = symmetric_group(m);
    long expected = 1;
    for (int k = 2; k <= m; ++k) expected *= k;
    CHECK(g.order() == static_cast<std::uint32_t>(expected));
    CHECK(g.permutation(g.identity_index()) == Permutation::identity(m));
    for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
      CHECK(g.index_of(g.permutation(idx)) == idx);
      CHECK(g.length(idx) == g.permutation(idx).length());
      for (int i = 1; i < m; ++i) {
        Permutation direct = g.permutation(idx).right_multiplied(i);
        CHECK(g.right_gen(idx, i) == g.index_of(direct));
        CHECK(g.length_increases(idx, i) == (direct.length() > g.length(idx)));
      }
    }
  }
}

TEST_CASE("names parse back to indices") {
  const SymmetricGroup& g = symmetric_group(3);
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    CHECK(g.index_of_name(g.name(idx)) == idx);
  }
  CHECK(g.name(g.identity_index()) == "123");
  CHECK(g.index_of_name("999") == g.order());
  CHECK(g.index_of_name("12") == g.order());
  CHECK(g.index_of_name("") == g.order());
  CHECK(g.index_of_name("122") == g.order());
}
