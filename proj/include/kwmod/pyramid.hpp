#ifndef KWMOD_PYRAMID_HPP
#define KWMOD_PYRAMID_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "kwmod/partition.hpp"

namespace kwmod {

/// A box of a pyramid. Even boxes are written b1..bm in ASCII (the barred
/// indices), odd boxes 1..n.
struct BoxId {
  Parity parity;
  int index; // 1-based within the parity class

  friend bool operator==(const BoxId&, const BoxId&) = default;
  friend auto operator<=>(const BoxId&, const BoxId&) = default;
};

inline BoxId even_box(int i) { return {Parity::even, i}; }
inline BoxId odd_box(int i) { return {Parity::odd, i}; }

std::string box_str(BoxId b);                 // "b3" or "7"
std::optional<BoxId> parse_box(const std::string& s);

/// One row of boxes: centers at start_col, start_col+2, ..., step 2.
struct PyramidRow {
  int start_col;
  int length;
  Parity parity;

  int last_col() const { return start_col + 2 * (length - 1); }
  friend bool operator==(const PyramidRow&, const PyramidRow&) = default;
};

/// Rows of parity-marked boxes, bottom row first, satisfying the pyramid
/// shape condition f_j <= f_{j+1} <= l_{j+1} <= l_j. Boxes are numbered per
/// parity class, left to right along a row and then the next row up; the
/// numbering is fixed at construction and survives row shifts.
class Pyramid {
public:
  Pyramid(int m, int n, std::vector<PyramidRow> rows);

  int m() const { return m_; }
  int n() const { return n_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<PyramidRow>& rows() const { return rows_; }

  int row_of(BoxId b) const;  // 1-based, bottom row = 1
  int col_of(BoxId b) const;

  /// Boxes of row j (1-based), ordered left to right.
  std::vector<BoxId> boxes_in_row(int j) const;
  /// All boxes: even 1..m then odd 1..n.
  std::vector<BoxId> boxes() const;

private:
  void check_box(BoxId b) const;

  int m_, n_;
  std::vector<PyramidRow> rows_;
  std::vector<std::pair<int, int>> pos_even_, pos_odd_; // index-1 -> (row, col)
};

/// Symmetric pyramid of (r,q): every row centered around column 0, row
/// order from merge_shapes. Its grading is the Dynkin grading of e_{r,q}.
Pyramid dynkin_pyramid(const PartitionPair& pp);

/// Moves every row whose length parity differs from the bottom (longest)
/// row's one unit to the left. The result has all box columns of equal
/// parity, hence an even grading.
Pyramid shift_pyramid(const Pyramid& p);

/// Left-justified variant: every row starts at column 0 (the Young diagram
/// layout). Centering is dropped; shape and numbering rules are unchanged.
Pyramid young_pyramid(const PartitionPair& pp);

/// deg e_{i,j} = col(j) - col(i).
int degree(const Pyramid& p, BoxId i, BoxId j);

/// True iff every matrix-unit degree is even, i.e. all box columns agree
/// mod 2.
bool is_even_pyramid(const Pyramid& p);

struct RenderOptions {
  bool numbered = false; // label boxes b1../1.. instead of +/- signs
};

/// Fixed-width picture: boxes drawn with +-| borders, the origin column
/// marked with '.' below the bottom row. Output is stable and golden-tested.
std::string render_ascii(const Pyramid& p, const RenderOptions& opts = {});

std::string render_svg(const Pyramid& p, const RenderOptions& opts = {});

} // namespace kwmod

#endif
