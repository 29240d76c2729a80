#include "rsf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsf {

EchelonBasis::EchelonBasis(long dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
}

void EchelonBasis::reduce(Vec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[static_cast<std::size_t>(pivots_[k])];
    if (c == 0) continue;
    Rational factor = c;  // pivot entries are 1
    const Vec& row = rows_[k];
    for (std::size_t j = static_cast<std::size_t>(pivots_[k]); j < v.size(); ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
}

bool EchelonBasis::insert(Vec v) {
  if (static_cast<long>(v.size()) != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  long pivot = -1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) {
      pivot = static_cast<long>(j);
      break;
    }
  }
  if (pivot < 0) return false;

  Rational lead = v[static_cast<std::size_t>(pivot)];
  for (std::size_t j = static_cast<std::size_t>(pivot); j < v.size(); ++j) v[j] /= lead;

  // Clear the new pivot column from existing rows to stay fully reduced.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = rows_[k][static_cast<std::size_t>(pivot)];
    if (c == 0) continue;
    for (std::size_t j = static_cast<std::size_t>(pivot); j < v.size(); ++j) {
      if (v[j] != 0) rows_[k][j] -= c * v[j];
    }
  }

  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  if (static_cast<long>(v.size()) != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

bool EchelonBasis::contains_subspace(const EchelonBasis& o) const {
  for (const Vec& row : o.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Vec> image_basis(const LinOp& op) {
  EchelonBasis basis(op.rows());
  for (long c = 0; c < op.cols(); ++c) {
    Vec v(static_cast<std::size_t>(op.rows()), Rational(0));
    for (const auto& [r, w] : op.column(c)) v[static_cast<std::size_t>(r)] = w;
    basis.insert(std::move(v));
  }
  return basis.rows();
}

long rank_of(const LinOp& op) {
  EchelonBasis basis(op.rows());
  for (long c = 0; c < op.cols(); ++c) {
    Vec v(static_cast<std::size_t>(op.rows()), Rational(0));
    for (const auto& [r, w] : op.column(c)) v[static_cast<std::size_t>(r)] = w;
    basis.insert(std::move(v));
  }
  return basis.rank();
}

std::vector<Vec> kernel_basis(const LinOp& op) {
  // Row-reduce the matrix, then read the null space off the free columns:
  // for each free column f, the vector with 1 at f and -entry at each pivot
  // coordinate solves Ax = 0. Columns scanned in order keeps this canonical.
  long rows = op.rows(), cols = op.cols();
  std::vector<Vec> mat(static_cast<std::size_t>(rows),
                       Vec(static_cast<std::size_t>(cols), Rational(0)));
  for (long c = 0; c < cols; ++c)
    for (const auto& [r, w] : op.column(c)) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = w;

  std::vector<long> pivot_of_col(static_cast<std::size_t>(cols), -1);
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long sel = -1;
    for (long r = rank; r < rows; ++r) {
      if (mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(mat[static_cast<std::size_t>(sel)], mat[static_cast<std::size_t>(rank)]);
    Vec& prow = mat[static_cast<std::size_t>(rank)];
    Rational lead = prow[static_cast<std::size_t>(c)];
    for (long j = c; j < cols; ++j) prow[static_cast<std::size_t>(j)] /= lead;
    for (long r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Rational f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (long j = c; j < cols; ++j)
        mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * prow[static_cast<std::size_t>(j)];
    }
    pivot_of_col[static_cast<std::size_t>(c)] = rank;
    ++rank;
  }

  std::vector<Vec> out;
  for (long f = 0; f < cols; ++f) {
    if (pivot_of_col[static_cast<std::size_t>(f)] >= 0) continue;
    Vec v(static_cast<std::size_t>(cols), Rational(0));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (long c = 0; c < cols; ++c) {
      long p = pivot_of_col[static_cast<std::size_t>(c)];
      if (p >= 0) v[static_cast<std::size_t>(c)] = -mat[static_cast<std::size_t>(p)][static_cast<std::size_t>(f)];
    }
    out.push_back(std::move(v));
  }
  return out;
}

EchelonBasis span_of(const std::vector<Vec>& vectors, long dim) {
  EchelonBasis basis(dim);
  for (const Vec& v : vectors) basis.insert(v);
  return basis;
}

}  // namespace rsf
