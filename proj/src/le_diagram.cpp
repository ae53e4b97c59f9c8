#include "wlp/le_diagram.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wlp {

namespace {

std::pair<int, int> cell_index(const LeDiagram& d, int row_label, int col_label) {
  auto rit = std::find(d.row_labels.begin(), d.row_labels.end(), row_label);
  auto cit = std::find(d.col_labels.begin(), d.col_labels.end(), col_label);
  if (rit == d.row_labels.end() || cit == d.col_labels.end())
    throw std::invalid_argument("unknown boundary label");
  return {static_cast<int>(rit - d.row_labels.begin()),
          static_cast<int>(cit - d.col_labels.begin())};
}

}  // namespace

bool LeDiagram::has_cell(int row_label, int col_label) const {
  auto rit = std::find(row_labels.begin(), row_labels.end(), row_label);
  auto cit = std::find(col_labels.begin(), col_labels.end(), col_label);
  if (rit == row_labels.end() || cit == col_labels.end()) return false;
  return cit - col_labels.begin() < shape[rit - row_labels.begin()];
}

Cell LeDiagram::at(int row_label, int col_label) const {
  auto [r, c] = cell_index(*this, row_label, col_label);
  if (c >= shape[r]) throw std::invalid_argument("cell outside the shape");
  return cells[r][c];
}

void LeDiagram::set(int row_label, int col_label, Cell value) {
  auto [r, c] = cell_index(*this, row_label, col_label);
  if (c >= shape[r]) throw std::invalid_argument("cell outside the shape");
  cells[r][c] = value;
}

LeDiagram le_shape(int n, std::vector<int> row_labels) {
  std::set<int> rows(row_labels.begin(), row_labels.end());
  if (rows.size() != row_labels.size())
    throw std::invalid_argument("repeated row label");
  for (int a : row_labels) {
    if (a < 1 || a > n) throw std::invalid_argument("row label out of [1..n]");
  }
  LeDiagram d;
  d.n = n;
  d.k = static_cast<int>(rows.size());
  d.row_labels.assign(rows.begin(), rows.end());
  for (int b = n; b >= 1; --b) {
    if (!rows.count(b)) d.col_labels.push_back(b);
  }
  for (int a : d.row_labels) {
    int len = 0;
    for (int b : d.col_labels) {
      if (b > a) ++len;
    }
    d.shape.push_back(len);
    d.cells.emplace_back(len, Cell::Zero);
  }
  return d;
}

LeDiagram le_from_necklace(const std::vector<std::vector<int>>& terms) {
  if (!is_grassmann_necklace(terms))
    throw std::invalid_argument("terms do not satisfy the necklace condition");
  const int n = static_cast<int>(terms.size());
  LeDiagram d = le_shape(n, terms[0]);
  std::set<int> first(terms[0].begin(), terms[0].end());
  for (int i = 2; i <= n; ++i) {
    std::set<int> cur(terms[i - 1].begin(), terms[i - 1].end());
    std::vector<int> leaving;  // in the first term, not in term i
    std::vector<int> entering;
    for (int a : first) {
      if (!cur.count(a)) leaving.push_back(a);
    }
    for (int b : cur) {
      if (!first.count(b)) entering.push_back(b);
    }
    std::sort(leaving.rbegin(), leaving.rend());
    std::sort(entering.begin(), entering.end());
    for (size_t m = 0; m < leaving.size(); ++m) {
      if (!d.has_cell(leaving[m], entering[m]))
        throw std::domain_error("plus address outside the shape");
      d.set(leaving[m], entering[m], Cell::Plus);
    }
  }
  return d;
}

LeDiagram le_from_necklace(const GrassmannNecklace& neck) {
  return le_from_necklace(neck.terms);
}

bool validate_le(const LeDiagram& d) {
  const int rows = static_cast<int>(d.shape.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < d.shape[r]; ++c) {
      if (d.cells[r][c] != Cell::Zero) continue;
      bool left_zero = true;
      for (int c2 = 0; c2 < c; ++c2) left_zero = left_zero && d.cells[r][c2] == Cell::Zero;
      bool above_zero = true;
      // Shape rows are weakly decreasing, so every row above reaches column c.
      for (int r2 = 0; r2 < r; ++r2)
        above_zero = above_zero && d.cells[r2][c] == Cell::Zero;
      if (!left_zero && !above_zero) return false;
    }
  }
  return true;
}

int plus_count(const LeDiagram& d) {
  int count = 0;
  for (const auto& row : d.cells) {
    for (Cell c : row) count += c == Cell::Plus ? 1 : 0;
  }
  return count;
}

int dimension(const WilsonLoopDiagram& w) {
  return plus_count(le_from_necklace(grassmann_necklace(w)));
}

std::string render_ascii(const LeDiagram& d) {
  int width = 1;
  for (int x = d.n; x >= 10; x /= 10) ++width;
  std::ostringstream out;
  out << std::string(width, ' ');
  for (int b : d.col_labels) out << ' ' << std::setw(width) << b;
  out << '\n';
  for (size_t r = 0; r < d.row_labels.size(); ++r) {
    out << std::setw(width) << d.row_labels[r];
    for (int c = 0; c < d.shape[r]; ++c)
      out << ' ' << std::setw(width) << (d.cells[r][c] == Cell::Plus ? '+' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace wlp
