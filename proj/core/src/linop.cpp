#include "rsf/linop.hpp"

#include <stdexcept>

namespace rsf {

LinOp::LinOp(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimensions");
  data_.resize(static_cast<std::size_t>(cols));
}

LinOp LinOp::identity(long d) {
  LinOp out(d, d);
  for (long i = 0; i < d; ++i) out.set(i, i, Rational(1));
  return out;
}

LinOp LinOp::unit(long d, long r, long c) {
  LinOp out(d, d);
  out.set(r, c, Rational(1));
  return out;
}

long LinOp::nnz() const {
  long total = 0;
  for (const auto& col : data_) total += static_cast<long>(col.size());
  return total;
}

void LinOp::set(long r, long c, Rational v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("entry out of range");
  auto& col = data_[static_cast<std::size_t>(c)];
  if (v == 0) {
    col.erase(r);
  } else {
    col[r] = std::move(v);
  }
}

void LinOp::add_to(long r, long c, const Rational& v) {
  if (v == 0) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("entry out of range");
  auto& col = data_[static_cast<std::size_t>(c)];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
  } else {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

Rational LinOp::at(long r, long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("entry out of range");
  const auto& col = data_[static_cast<std::size_t>(c)];
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

const std::map<long, Rational>& LinOp::column(long c) const {
  return data_.at(static_cast<std::size_t>(c));
}

LinOp LinOp::operator*(const LinOp& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("composition shape mismatch");
  LinOp out(rows_, o.cols_);
  for (long c = 0; c < o.cols_; ++c) {
    for (const auto& [k, v] : o.data_[static_cast<std::size_t>(c)]) {
      for (const auto& [r, w] : data_[static_cast<std::size_t>(k)]) {
        out.add_to(r, c, w * v);
      }
    }
  }
  return out;
}

LinOp LinOp::operator+(const LinOp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  LinOp out = *this;
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : o.data_[static_cast<std::size_t>(c)]) out.add_to(r, c, v);
  return out;
}

LinOp LinOp::operator-(const LinOp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  LinOp out = *this;
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : o.data_[static_cast<std::size_t>(c)]) out.add_to(r, c, -v);
  return out;
}

LinOp LinOp::scaled(const Rational& c) const {
  LinOp out(rows_, cols_);
  if (c == 0) return out;
  for (long j = 0; j < cols_; ++j)
    for (const auto& [r, v] : data_[static_cast<std::size_t>(j)])
      out.data_[static_cast<std::size_t>(j)].emplace(r, v * c);
  return out;
}

bool LinOp::operator==(const LinOp& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool LinOp::is_zero() const {
  for (const auto& col : data_)
    if (!col.empty()) return false;
  return true;
}

Vec LinOp::apply(const Vec& v) const {
  if (static_cast<long>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  Vec out(static_cast<std::size_t>(rows_), Rational(0));
  for (long c = 0; c < cols_; ++c) {
    const Rational& x = v[static_cast<std::size_t>(c)];
    if (x == 0) continue;
    for (const auto& [r, w] : data_[static_cast<std::size_t>(c)])
      out[static_cast<std::size_t>(r)] += w * x;
  }
  return out;
}

LinOp LinOp::kron(const LinOp& o) const {
  LinOp out(rows_ * o.rows_, cols_ * o.cols_);
  for (long c1 = 0; c1 < cols_; ++c1) {
    for (const auto& [r1, v1] : data_[static_cast<std::size_t>(c1)]) {
      for (long c2 = 0; c2 < o.cols_; ++c2) {
        for (const auto& [r2, v2] : o.data_[static_cast<std::size_t>(c2)]) {
          out.set(r1 * o.rows_ + r2, c1 * o.cols_ + c2, v1 * v2);
        }
      }
    }
  }
  return out;
}

LinOp embed_pair_at(const LinOp& op, int i, int m, int n) {
  if (op.rows() != static_cast<long>(n) * n || op.cols() != static_cast<long>(n) * n)
    throw std::invalid_argument("pair operator must act on V (x) V");
  if (i < 1 || i > m - 1) throw std::out_of_range("slot index out of range");
  long left = 1, right = 1;
  for (int k = 0; k < i - 1; ++k) left *= n;
  for (int k = 0; k < m - i - 1; ++k) right *= n;
  long dim = left;
  for (int k = 0; k < 2; ++k) dim *= n;
  dim *= right;
  LinOp out(dim, dim);
  for (long c = 0; c < op.cols(); ++c) {
    for (const auto& [r, v] : op.column(c)) {
      for (long a = 0; a < left; ++a) {
        for (long b = 0; b < right; ++b) {
          out.set((a * op.rows() + r) * right + b, (a * op.cols() + c) * right + b, v);
        }
      }
    }
  }
  return out;
}

LinOp commutator(const LinOp& a, const LinOp& b) {
  return a * b - b * a;
}

}  // namespace rsf
