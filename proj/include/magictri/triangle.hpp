#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace magictri {

// Geometry of an n-level triangle.
//
// Rows are numbered 1..n from the bottom; row r holds 2(n-r)+1 cells at
// positions 1..2(n-r)+1 from the left. Odd positions are upward-pointing
// cells, even positions downward-pointing. Flat cell indices run 1..n^2,
// bottom row first, left to right within each row.
//
// Every cell also lies on one line of each diagonal family:
//   - positive-slope diagonals, numbered 1..n starting at the left edge;
//     diagonal p covers positions 2p-1 and 2p of every row it meets;
//   - negative-slope diagonals, numbered 1..n starting at the right edge;
//     diagonal q covers positions w-2(q-1) and w-2(q-1)-1 of a row of
//     width w.
// The coordinates satisfy row + p + q = n+2 for upward cells and n+1 for
// downward cells, so q is pinned by the row and the positive diagonal.
//
// Line k of any family holds 2(n-k)+1 cells. Lines k and n+1-k of the same
// family are paired; an arrangement is magic when every paired sum equals
// the magic constant n(n^2+1). For odd n the middle line pairs with itself,
// so its sum is counted twice.

struct CellCoord {
  int row = 0;  // 1..n, bottom row is 1
  int pos = 0;  // 1..2(n-row)+1, leftmost is 1
  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

struct LineCoord {
  int row = 0;
  int pos_diag = 0;
  int neg_diag = 0;
  friend bool operator==(const LineCoord&, const LineCoord&) = default;
};

enum class LineFamily : int { row = 0, pos_diag = 1, neg_diag = 2 };

inline constexpr std::array<LineFamily, 3> kLineFamilies = {
    LineFamily::row, LineFamily::pos_diag, LineFamily::neg_diag};

const char* line_family_name(LineFamily f);

/// Common target value n(n^2+1) of all paired line sums.
std::int64_t magic_constant(int levels);

/// Number of cells in a row, 2(n-row)+1.
int row_width(int levels, int row);

bool is_upward(const CellCoord& c);

/// 1-based flat index of a cell.
int index_of_coord(int levels, const CellCoord& c);

/// Cell of a 1-based flat index.
CellCoord coord_of_index(int levels, int index);

/// Row and diagonal numbers of the three lines through a cell.
LineCoord line_coord(int levels, const CellCoord& c);

/// Ascending 1-based flat indices of line k (1..n) of a family.
std::vector<int> cells_of_line(int levels, LineFamily family, int k);

// Per-level lookup tables for the three line families, built once per level
// and shared. Hot loops index these instead of recomputing coordinates.
class LineTable {
 public:
  static const LineTable& get(int levels);

  int levels() const { return levels_; }
  int cell_count() const { return levels_ * levels_; }
  int pair_count() const { return (levels_ + 1) / 2; }

  // 0-based line id of a 0-based cell.
  int line_of(LineFamily f, int cell) const {
    return line_of_[static_cast<int>(f)][static_cast<std::size_t>(cell)];
  }
  // 0-based cells of a 0-based line, ascending.
  std::span<const int> line_cells(LineFamily f, int line) const {
    return lines_[static_cast<int>(f)][static_cast<std::size_t>(line)];
  }
  // Lines l and n-1-l (0-based) form pair min(l, n-1-l).
  int pair_of(int line) const { return line < levels_ - 1 - line ? line : levels_ - 1 - line; }
  bool self_paired(int line) const { return line == levels_ - 1 - line; }

  LineTable(const LineTable&) = delete;
  LineTable& operator=(const LineTable&) = delete;

 private:
  explicit LineTable(int levels);

  int levels_;
  std::array<std::vector<int>, 3> line_of_;
  std::array<std::vector<std::vector<int>>, 3> lines_;
};

/// Throws std::invalid_argument unless entries is a permutation of 1..n^2,
/// naming the first out-of-range, duplicate or missing value.
void validate_entries(int levels, std::span<const int> entries);

// An assignment of the integers 1..n^2 to the cells, stored flat:
// entries()[i] is the value at flat index i+1.
class TriangleArrangement {
 public:
  TriangleArrangement(int levels, std::vector<int> entries);

  // Skips permutation validation; the caller guarantees it.
  static TriangleArrangement unchecked(int levels, std::vector<int> entries);

  int levels() const { return levels_; }
  int cell_count() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  /// Value at a 1-based flat index.
  int value_at(int index) const;

  friend bool operator==(const TriangleArrangement&, const TriangleArrangement&) = default;
  friend auto operator<=>(const TriangleArrangement&, const TriangleArrangement&) = default;

 private:
  struct Unchecked {};
  TriangleArrangement(Unchecked, int levels, std::vector<int> entries);

  int levels_;
  std::vector<int> entries_;
};

struct PairedSums {
  int levels = 0;
  std::int64_t magic = 0;
  // Raw line sums, index k-1 for line k.
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> pos_diag_sums;
  std::vector<std::int64_t> neg_diag_sums;
  // Paired sums h_k, p_k, q_k for k = 1..ceil(n/2).
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
};

PairedSums paired_sums(const TriangleArrangement& t);

bool is_magic(const TriangleArrangement& t);
/// Same check on a raw entry span (no permutation validation).
bool is_magic(int levels, std::span<const int> entries);

}  // namespace magictri
