#include "rsf/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

std::optional<Partition> Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    if (tok.empty()) return std::nullopt;
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > 1000000) return std::nullopt;
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) return std::nullopt;  // trailing comma
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition row index is 1-based");
  return i <= length() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
}

bool Partition::contains_cell(int row, int col) const {
  return row >= 1 && col >= 1 && row <= length() && col <= part(row);
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  out.resize(static_cast<std::size_t>(parts_[0]));
  for (std::size_t j = 0; j < out.size(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > static_cast<int>(j)) ++count;
    out[j] = count;
  }
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back(Cell{i, j});
  return out;
}

int Partition::hook_length(const Cell& c) const {
  if (!contains_cell(c.row, c.col)) throw std::out_of_range("cell outside the diagram");
  int arm = part(c.row) - c.col;
  int leg = conjugate().part(c.col) - c.row;
  return arm + leg + 1;
}

std::vector<std::pair<Cell, int>> Partition::hooks() const {
  Partition conj = conjugate();
  std::vector<std::pair<Cell, int>> out;
  for (const Cell& c : cells()) {
    int arm = part(c.row) - c.col;
    int leg = conj.part(c.col) - c.row;
    out.emplace_back(c, arm + leg + 1);
  }
  return out;
}

std::vector<Cell> Partition::addable_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length() + 1; ++i) {
    int row_len = part(i);
    int above = i == 1 ? -1 : part(i - 1);
    if (i == 1 || row_len < above) out.push_back(Cell{i, row_len + 1});
  }
  return out;
}

Partition Partition::with_cell_added(const Cell& c) const {
  auto addable = addable_cells();
  if (std::find(addable.begin(), addable.end(), c) == addable.end())
    throw std::invalid_argument("cell is not addable");
  std::vector<int> parts = parts_;
  if (c.row == length() + 1) {
    parts.push_back(1);
  } else {
    parts[static_cast<std::size_t>(c.row) - 1] += 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::with_cell_removed(const Cell& c) const {
  if (!contains_cell(c.row, c.col) || c.col != part(c.row) ||
      (c.row < length() && part(c.row + 1) == part(c.row)))
    throw std::invalid_argument("cell is not removable");
  std::vector<int> parts = parts_;
  parts[static_cast<std::size_t>(c.row) - 1] -= 1;
  if (parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

long long Partition::b_stat() const {
  Partition conj = conjugate();  // keep alive: parts() is a view into it
  long long out = 0;
  for (int p : conj.parts()) out += static_cast<long long>(p) * (p - 1) / 2;
  return out;
}

std::string Partition::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {
void gen_partitions(int remaining, int cap, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int next = std::min(remaining, cap); next >= 1; --next) {
    stack.push_back(next);
    gen_partitions(remaining - next, next, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of needs m >= 0");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(m, m, stack, out);
  return out;
}

long long hook_content_dim(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("hook_content_dim needs n >= 1");
  if (lambda.length() > n) return 0;
  BigInt num(1), den(1);
  Partition conj = lambda.conjugate();
  for (const Cell& c : lambda.cells()) {
    num *= (n + c.col - c.row);
    int arm = lambda.part(c.row) - c.col;
    int leg = conj.part(c.col) - c.row;
    den *= (arm + leg + 1);
  }
  BigInt q = num / den;
  if (q * den != num) throw std::logic_error("hook content product was not integral");
  return q.convert_to<long long>();
}

namespace {
// Fill rows of lambda top to bottom with letters respecting remaining
// multiplicities; rows weakly increase, columns strictly increase.
long long count_ssyt(const Partition& lambda, int row, std::vector<int>& remaining,
                     std::vector<std::vector<int>>& filled) {
  if (row > lambda.length()) return 1;
  int width = lambda.part(row);
  std::vector<int>& this_row = filled[static_cast<std::size_t>(row) - 1];
  long long total = 0;

  // Recursive fill of one row left to right.
  auto fill_cell = [&](auto&& self, int col, int min_letter) -> void {
    if (col > width) {
      total += count_ssyt(lambda, row + 1, remaining, filled);
      return;
    }
    int lower = min_letter;
    if (row > 1) {
      int above = filled[static_cast<std::size_t>(row) - 2][static_cast<std::size_t>(col) - 1];
      lower = std::max(lower, above + 1);
    }
    for (int letter = lower; letter <= static_cast<int>(remaining.size()); ++letter) {
      if (remaining[static_cast<std::size_t>(letter) - 1] == 0) continue;
      remaining[static_cast<std::size_t>(letter) - 1] -= 1;
      this_row[static_cast<std::size_t>(col) - 1] = letter;
      self(self, col + 1, letter);
      remaining[static_cast<std::size_t>(letter) - 1] += 1;
    }
  };
  fill_cell(fill_cell, 1, 1);
  return total;
}
}  // namespace

long long kostka_number(const Partition& lambda, const std::vector<int>& mu) {
  int total = 0;
  for (int v : mu) {
    if (v < 0) throw std::invalid_argument("content entries must be nonnegative");
    total += v;
  }
  if (total != lambda.weight()) return 0;
  std::vector<int> remaining = mu;
  std::vector<std::vector<int>> filled;
  for (int i = 1; i <= lambda.length(); ++i)
    filled.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
  return count_ssyt(lambda, 1, remaining, filled);
}

}  // namespace rsf
