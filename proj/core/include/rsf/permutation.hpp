#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsf {

// Permutations of {1..m} in one-line notation. Right multiplication by the
// simple transposition s_i swaps the VALUES IN POSITIONS i, i+1 of the
// one-line word; this is the convention every worked identity downstream
// (reduced words, sorting networks, Hecke products) relies on.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);  // validates
  static Permutation identity(int m);
  static Permutation from_word(int m, const std::vector<int>& word);
  // Longest element of the subgroup permuting 1..k inside S_m (k <= m);
  // for k == m this is the reversal.
  static Permutation longest_in_prefix(int m, int k);

  int size() const { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const { return one_line_; }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i) - 1]; }

  int length() const;                       // inversion count
  std::vector<int> reduced_word() const;    // canonical: repeatedly undo the first descent
  Permutation right_multiplied(int gen) const;
  Permutation inverse() const;

  std::string to_text() const;  // "2,1,3" for m > 9 safety; "213" when m <= 9
  bool operator==(const Permutation& o) const { return one_line_ == o.one_line_; }
  bool operator<(const Permutation& o) const { return one_line_ < o.one_line_; }

 private:
  std::vector<int> one_line_;
};

// Dense lookup tables for one symmetric group S_m (m <= 10). Elements are
// indexed by lexicographic rank of the one-line word; the identity is rank 0.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int m);

  int m() const { return m_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t identity_index() const { return 0; }

  std::uint32_t index_of(const std::vector<int>& one_line) const;
  std::uint32_t index_of(const Permutation& p) const { return index_of(p.one_line()); }
  const std::vector<int>& one_line(std::uint32_t idx) const;
  Permutation permutation(std::uint32_t idx) const;
  int length(std::uint32_t idx) const { return lengths_[idx]; }

  // Index of sigma * s_i (1 <= i <= m-1).
  std::uint32_t right_gen(std::uint32_t idx, int i) const;
  bool length_increases(std::uint32_t idx, int i) const {
    return lengths_[right_gen(idx, i)] > lengths_[idx];
  }

  const std::vector<std::uint8_t>& reduced_word(std::uint32_t idx) const {
    return words_[idx];
  }

  // One-line word as text, "213" style (m <= 9 guaranteed by construction cap).
  std::string name(std::uint32_t idx) const;
  // Inverse of name(): parses "213"; returns order() when not a valid element.
  std::uint32_t index_of_name(const std::string& text) const;

 private:
  int m_;
  std::uint32_t order_;
  std::vector<std::vector<int>> elements_;       // rank -> one-line
  std::vector<int> lengths_;
  std::vector<std::vector<std::uint32_t>> right_;  // [i-1][rank]
  std::vector<std::vector<std::uint8_t>> words_;
};

// Shared per-m instance (thread-safe, built once).
const SymmetricGroup& symmetric_group(int m);

}  // namespace rsf
