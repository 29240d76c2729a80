#include "rsf/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsf {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau row count does not match shape");
  int m = shape_.weight();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= shape_.length(); ++i) {
    const auto& row = rows_[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(row.size()) != shape_.part(i))
      throw std::invalid_argument("tableau row length does not match shape");
    for (int j = 1; j <= static_cast<int>(row.size()); ++j) {
      int v = row[static_cast<std::size_t>(j) - 1];
      if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau entries must be a permutation of 1..m");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 1 && row[static_cast<std::size_t>(j) - 2] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (i > 1 && rows_[static_cast<std::size_t>(i) - 2][static_cast<std::size_t>(j) - 1] >= v)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

std::optional<StandardTableau> StandardTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  std::size_t pos = 0;
  if (text.empty()) return std::nullopt;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string_view row_text =
        text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    std::vector<int> row;
    std::size_t rp = 0;
    while (rp < row_text.size()) {
      std::size_t comma = row_text.find(',', rp);
      std::string_view tok = row_text.substr(
          rp, comma == std::string_view::npos ? std::string_view::npos : comma - rp);
      if (tok.empty()) return std::nullopt;
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1000000) return std::nullopt;
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      rp = comma + 1;
      if (rp == row_text.size()) return std::nullopt;
    }
    if (row.empty()) return std::nullopt;
    parts.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
    if (pos == text.size()) return std::nullopt;  // trailing ';'
  }
  try {
    return StandardTableau(Partition(std::move(parts)), std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

int StandardTableau::entry(int row, int col) const {
  if (!shape_.contains_cell(row, col)) throw std::out_of_range("cell outside the diagram");
  return rows_[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1];
}

Cell StandardTableau::cell_of(int k) const {
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j)
      if (entry(i, j) == k) return Cell{i, j};
  throw std::out_of_range("entry not present in tableau");
}

std::vector<int> StandardTableau::content_exponents() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j)
      out[static_cast<std::size_t>(entry(i, j)) - 1] = j - i;
  return out;
}

StandardTableau StandardTableau::without_last() const {
  int m = size();
  if (m == 0) throw std::logic_error("cannot remove from the empty tableau");
  Cell c = cell_of(m);
  std::vector<std::vector<int>> rows = rows_;
  rows[static_cast<std::size_t>(c.row) - 1].pop_back();
  if (rows.back().empty()) rows.pop_back();
  return StandardTableau(shape_.with_cell_removed(c), std::move(rows));
}

std::string StandardTableau::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

namespace {
void grow(const Partition& target, const Partition& shape,
          std::vector<std::vector<int>>& rows, int next,
          std::vector<StandardTableau>& out) {
  int m = target.weight();
  if (next > m) {
    out.emplace_back(shape, rows);
    return;
  }
  for (const Cell& c : shape.addable_cells()) {
    if (!target.contains_cell(c.row, c.col)) continue;
    if (c.row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[static_cast<std::size_t>(c.row) - 1].push_back(next);
    grow(target, shape.with_cell_added(c), rows, next + 1, out);
    rows[static_cast<std::size_t>(c.row) - 1].pop_back();
    if (rows.back().empty()) rows.pop_back();
  }
}
}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows;
  grow(shape, Partition(), rows, 1, out);
  return out;
}

}  // namespace rsf
