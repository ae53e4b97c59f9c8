#pragma once

#include <string>
#include <vector>

#include "wlp/necklace.hpp"

namespace wlp {

enum class Cell { Zero, Plus };

/// Young diagram in a k x (n-k) box with +/0 cells.  Rows are labelled by the
/// elements of the first necklace term (ascending, top to bottom), columns by
/// the complement (descending, left to right); the cell (a, b) exists exactly
/// when a < b.  Cells are addressed by their boundary labels.
struct LeDiagram {
  int k = 0;
  int n = 0;
  std::vector<int> row_labels;              // ascending
  std::vector<int> col_labels;              // descending, all n-k of them
  std::vector<int> shape;                   // row lengths, weakly decreasing
  std::vector<std::vector<Cell>> cells;     // cells[r].size() == shape[r]

  bool has_cell(int row_label, int col_label) const;
  Cell at(int row_label, int col_label) const;
  void set(int row_label, int col_label, Cell value);

  bool operator==(const LeDiagram&) const = default;
};

/// All-zero diagram whose shape is read off the row label set.
LeDiagram le_shape(int n, std::vector<int> row_labels);

/// Places a plus for every pairing of leaving and entering elements between
/// the first term and each later term.  Throws if the terms are not a
/// necklace or an address falls outside the shape.
LeDiagram le_from_necklace(const std::vector<std::vector<int>>& terms);
LeDiagram le_from_necklace(const GrassmannNecklace& neck);

/// Every zero must have all zeros to its left or all zeros above it.
bool validate_le(const LeDiagram& d);

int plus_count(const LeDiagram& d);

/// Plus count of the diagram built from the necklace of w.
int dimension(const WilsonLoopDiagram& w);

/// Grid of '+'/'0' characters with boundary labels.
std::string render_ascii(const LeDiagram& d);

}  // namespace wlp
