#pragma once

#include "rsf/partition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsf {

// Standard Young tableau: entries 1..m, rows and columns strictly increasing.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);  // validates

  // Parses "1,3;2" (rows separated by ';').
  static std::optional<StandardTableau> parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.weight(); }
  int entry(int row, int col) const;  // 1-based
  Cell cell_of(int k) const;          // position of entry k

  // c_k = col - row of the cell holding k, for k = 1..m.
  std::vector<int> content_exponents() const;

  // Tableau on 1..m-1 obtained by deleting the box holding m.
  StandardTableau without_last() const;

  std::string to_text() const;  // "1,3;2"
  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
  bool operator<(const StandardTableau& o) const { return rows_ < o.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// All standard tableaux of the given shape, in the deterministic order
// produced by placing 1, 2, ... successively into the highest admissible row.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

}  // namespace rsf
