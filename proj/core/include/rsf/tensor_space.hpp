#pragma once

#include <string>
#include <vector>

namespace rsf {

// Multiplicity of each letter 1..n in a basis word.
using GlWeight = std::vector<int>;

// Basis bookkeeping for V^(tensor m) with dim V = n: basis vectors are words
// (i_1,...,i_m) over {1..n} ordered lexicographically, first letter most
// significant.
class TensorSpace {
 public:
  TensorSpace(int n, int m);

  int local_dim() const { return n_; }
  int degree() const { return m_; }
  long dimension() const { return dim_; }

  long index_of_word(const std::vector<int>& word) const;
  std::vector<int> word_of_index(long idx) const;
  GlWeight letter_content(long idx) const;
  std::string word_name(long idx) const;  // digits, e.g. "112"

 private:
  int n_;
  int m_;
  long dim_;
};

}  // namespace rsf
