#include "rsf/permutation.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace rsf {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  int m = static_cast<int>(one_line_.size());
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a one-line permutation of 1..m");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  if (m < 0) throw std::invalid_argument("negative size");
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int m, const std::vector<int>& word) {
  Permutation p = identity(m);
  for (int i : word) p = p.right_multiplied(i);
  return p;
}

Permutation Permutation::longest_in_prefix(int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("prefix size out of range");
  Permutation p = identity(m);
  std::reverse(p.one_line_.begin(), p.one_line_.begin() + k);
  return p;
}

int Permutation::length() const {
  int m = size();
  int inv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (one_line_[static_cast<std::size_t>(i)] > one_line_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Undo the first descent repeatedly; reversing the undo sequence gives a
  // reduced word whose prefixes are the canonical words of shorter elements.
  std::vector<int> word;
  std::vector<int> v = one_line_;
  int m = size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < m; ++i) {
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i) + 1]) {
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
        word.push_back(i + 1);
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::right_multiplied(int gen) const {
  if (gen < 1 || gen >= size()) throw std::out_of_range("generator index out of range");
  Permutation p = *this;
  std::swap(p.one_line_[static_cast<std::size_t>(gen) - 1],
            p.one_line_[static_cast<std::size_t>(gen)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_text() const {
  std::string out;
  bool wide = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(one_line_[static_cast<std::size_t>(i)]);
  }
  return out;
}

SymmetricGroup::SymmetricGroup(int m) : m_(m) {
  if (m < 1 || m > 9) throw std::invalid_argument("symmetric group tables support 1 <= m <= 9");
  order_ = 1;
  for (int i = 2; i <= m; ++i) order_ *= static_cast<std::uint32_t>(i);

  elements_.reserve(order_);
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  do {
    elements_.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));

  lengths_.resize(order_);
  for (std::uint32_t r = 0; r < order_; ++r)
    lengths_[r] = Permutation(elements_[r]).length();

  right_.assign(static_cast<std::size_t>(std::max(0, m - 1)),
                std::vector<std::uint32_t>(order_));
  for (std::uint32_t r = 0; r < order_; ++r) {
    for (int i = 1; i < m; ++i) {
      std::vector<int> w = elements_[r];
      std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
      right_[static_cast<std::size_t>(i) - 1][r] = index_of(w);
    }
  }

  words_.resize(order_);
  for (std::uint32_t r = 0; r < order_; ++r) {
    auto word = Permutation(elements_[r]).reduced_word();
    words_[r].assign(word.begin(), word.end());
  }
}

std::uint32_t SymmetricGroup::index_of(const std::vector<int>& one_line) const {
  if (static_cast<int>(one_line.size()) != m_)
    throw std::invalid_argument("one-line word has wrong size");
  // Lehmer code -> lexicographic rank.
  std::uint32_t rank = 0;
  std::uint32_t fact = 1;
  for (int i = 2; i <= m_; ++i) fact *= static_cast<std::uint32_t>(i - 1);
  std::uint32_t f = fact;  // (m-1)!
  for (int i = 0; i < m_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m_; ++j)
      if (one_line[static_cast<std::size_t>(j)] < one_line[static_cast<std::size_t>(i)]) ++smaller;
    rank += static_cast<std::uint32_t>(smaller) * f;
    if (i + 1 < m_) f /= static_cast<std::uint32_t>(m_ - 1 - i);
  }
  return rank;
}

const std::vector<int>& SymmetricGroup::one_line(std::uint32_t idx) const {
  return elements_.at(idx);
}

Permutation SymmetricGroup::permutation(std::uint32_t idx) const {
  return Permutation(elements_.at(idx));
}

std::uint32_t SymmetricGroup::right_gen(std::uint32_t idx, int i) const {
  if (i < 1 || i >= m_) throw std::out_of_range("generator index out of range");
  return right_[static_cast<std::size_t>(i) - 1].at(idx);
}

std::string SymmetricGroup::name(std::uint32_t idx) const {
  return permutation(idx).to_text();
}

std::uint32_t SymmetricGroup::index_of_name(const std::string& text) const {
  if (static_cast<int>(text.size()) != m_) return order_;
  std::vector<int> v;
  v.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9') return order_;
    v.push_back(c - '0');
  }
  try {
    Permutation p(std::move(v));
    return index_of(p);
  } catch (const std::invalid_argument&) {
    return order_;
  }
}

const SymmetricGroup& symmetric_group(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<SymmetricGroup>(m);
  return *slot;
}

}  // namespace rsf
