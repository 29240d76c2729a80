#pragma once

#include "rsf/linop.hpp"

#include <vector>

namespace rsf {

// Incremental reduced row echelon form over the rationals. Pivots are the
// first nonzero coordinate of each stored row, normalized to 1 and cleared
// above and below, so the stored rows are the canonical basis of the span:
// two subspaces are equal iff their EchelonBasis rows are identical.
class EchelonBasis {
 public:
  explicit EchelonBasis(long dim);

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns true when the rank grew.
  bool insert(Vec v);

  long dim() const { return dim_; }
  long rank() const { return static_cast<long>(rows_.size()); }
  bool contains(Vec v) const;
  bool contains_subspace(const EchelonBasis& o) const;
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<long>& pivots() const { return pivots_; }
  bool operator==(const EchelonBasis& o) const {
    return dim_ == o.dim_ && rows_ == o.rows_;
  }

 private:
  void reduce(Vec& v) const;
  long dim_;
  std::vector<Vec> rows_;     // sorted by pivot position
  std::vector<long> pivots_;  // parallel to rows_
};

// Canonical basis of the column space.
std::vector<Vec> image_basis(const LinOp& op);
// Canonical basis of the null space (free columns get -1... convention below:
// each basis vector has 1 in its free coordinate).
std::vector<Vec> kernel_basis(const LinOp& op);
long rank_of(const LinOp& op);

EchelonBasis span_of(const std::vector<Vec>& vectors, long dim);

}  // namespace rsf
