#pragma once

#include "rsf/rational.hpp"

#include <map>
#include <vector>

namespace rsf {

using Vec = std::vector<Rational>;

// Exact sparse linear operator, column-major.
class LinOp {
 public:
  LinOp(long rows, long cols);
  static LinOp identity(long d);
  // Matrix unit E_{rc} of size d (1 in row r, column c; 0-based).
  static LinOp unit(long d, long r, long c);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const;

  void set(long r, long c, Rational v);
  void add_to(long r, long c, const Rational& v);
  Rational at(long r, long c) const;
  const std::map<long, Rational>& column(long c) const;

  LinOp operator*(const LinOp& o) const;  // composition: (*this) after o
  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp scaled(const Rational& c) const;
  bool operator==(const LinOp& o) const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;
  LinOp kron(const LinOp& o) const;  // this (x) o

 private:
  long rows_;
  long cols_;
  std::vector<std::map<long, Rational>> data_;  // per column
};

// Operator on V^(tensor m) acting as `op` (a map on V (x) V, size n^2) on
// tensor slots i, i+1 and identity elsewhere (1 <= i <= m-1).
LinOp embed_pair_at(const LinOp& op, int i, int m, int n);

// Commutator AB - BA.
LinOp commutator(const LinOp& a, const LinOp& b);

}  // namespace rsf
