#include "rsf/tensor_space.hpp"

#include <stdexcept>

namespace rsf {

TensorSpace::TensorSpace(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 0) throw std::invalid_argument("tensor space needs n >= 1, m >= 0");
  dim_ = 1;
  for (int i = 0; i < m; ++i) {
    if (dim_ > (1L << 40) / n) throw std::invalid_argument("tensor space too large");
    dim_ *= n;
  }
}

long TensorSpace::index_of_word(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != m_) throw std::invalid_argument("word length mismatch");
  long idx = 0;
  for (int letter : word) {
    if (letter < 1 || letter > n_) throw std::invalid_argument("letter out of range");
    idx = idx * n_ + (letter - 1);
  }
  return idx;
}

std::vector<int> TensorSpace::word_of_index(long idx) const {
  if (idx < 0 || idx >= dim_) throw std::out_of_range("basis index out of range");
  std::vector<int> word(static_cast<std::size_t>(m_));
  for (int pos = m_ - 1; pos >= 0; --pos) {
    word[static_cast<std::size_t>(pos)] = static_cast<int>(idx % n_) + 1;
    idx /= n_;
  }
  return word;
}

GlWeight TensorSpace::letter_content(long idx) const {
  GlWeight content(static_cast<std::size_t>(n_), 0);
  for (int letter : word_of_index(idx)) content[static_cast<std::size_t>(letter) - 1] += 1;
  return content;
}

std::string TensorSpace::word_name(long idx) const {
  std::string out;
  for (int letter : word_of_index(idx)) out += std::to_string(letter);
  return out;
}

}  // namespace rsf
