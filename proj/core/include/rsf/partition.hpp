#pragma once

#include "rsf/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsf {

// A box position in a Young diagram, 1-based (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  // Diagonal content exponent j - i; the attached eigenvalue is (s/r)^(col-row).
  int content() const { return col - row; }
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

class Partition {
 public:
  Partition() = default;  // empty partition
  explicit Partition(std::vector<int> parts);  // weakly decreasing positive parts

  // Parses "3,1,1"; "" gives the empty partition. Rejects non-partitions.
  static std::optional<Partition> parse(std::string_view text);

  int weight() const;                 // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;              // 1-based, 0 beyond the last row
  bool empty() const { return parts_.empty(); }
  bool contains_cell(int row, int col) const;

  Partition conjugate() const;
  std::vector<Cell> cells() const;    // row-major order

  int hook_length(const Cell& c) const;
  std::vector<std::pair<Cell, int>> hooks() const;  // row-major

  // Corner positions where a box may be appended, top row first.
  std::vector<Cell> addable_cells() const;
  Partition with_cell_added(const Cell& c) const;
  Partition with_cell_removed(const Cell& c) const;

  // sum_i binom(conjugate_part_i, 2).
  long long b_stat() const;

  std::string to_text() const;  // "3,1,1"; "" for empty
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of m in the order (m), (m-1,1), ..., (1^m)
// (first part descending, recursively).
std::vector<Partition> partitions_of(int m);

// Dimension of the irreducible with highest weight lambda for local rank n:
// prod over cells (n + col - row) / hook. Zero when length(lambda) > n.
long long hook_content_dim(const Partition& lambda, int n);

// Number of semistandard tableaux of shape lambda and content mu
// (mu may contain zeros; order matters as a composition).
long long kostka_number(const Partition& lambda, const std::vector<int>& mu);

}  // namespace rsf
