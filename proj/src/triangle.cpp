#include "magictri/triangle.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace magictri {

namespace {

void check_levels(int levels) {
  if (levels < 1) {
    throw std::invalid_argument("levels must be positive, got " + std::to_string(levels));
  }
}

// Flat index (1-based) of the cell before row r: rows 1..r-1 hold
// sum 2(n-j)+1 = (r-1)(2n+1-r) cells.
int row_offset(int levels, int row) { return (row - 1) * (2 * levels + 1 - row); }

void check_line_index(int levels, int k) {
  if (k < 1 || k > levels) {
    throw std::out_of_range("line " + std::to_string(k) + " out of range for " +
                            std::to_string(levels) + " levels");
  }
}

}  // namespace

const char* line_family_name(LineFamily f) {
  switch (f) {
    case LineFamily::row: return "row";
    case LineFamily::pos_diag: return "posdiag";
    case LineFamily::neg_diag: return "negdiag";
  }
  return "?";
}

std::int64_t magic_constant(int levels) {
  check_levels(levels);
  const auto n = static_cast<std::int64_t>(levels);
  return n * (n * n + 1);
}

int row_width(int levels, int row) {
  check_levels(levels);
  if (row < 1 || row > levels) {
    throw std::out_of_range("row " + std::to_string(row) + " out of range for " +
                            std::to_string(levels) + " levels");
  }
  return 2 * (levels - row) + 1;
}

bool is_upward(const CellCoord& c) { return c.pos % 2 == 1; }

int index_of_coord(int levels, const CellCoord& c) {
  check_levels(levels);
  if (c.row < 1 || c.row > levels || c.pos < 1 || c.pos > 2 * (levels - c.row) + 1) {
    throw std::out_of_range("cell (row " + std::to_string(c.row) + ", pos " +
                            std::to_string(c.pos) + ") out of range for " +
                            std::to_string(levels) + " levels");
  }
  return row_offset(levels, c.row) + c.pos;
}

CellCoord coord_of_index(int levels, int index) {
  check_levels(levels);
  if (index < 1 || index > levels * levels) {
    throw std::out_of_range("flat index " + std::to_string(index) + " out of range for " +
                            std::to_string(levels) + " levels");
  }
  int row = 1;
  while (row < levels && index > row_offset(levels, row + 1)) ++row;
  return CellCoord{row, index - row_offset(levels, row)};
}

LineCoord line_coord(int levels, const CellCoord& c) {
  const int index = index_of_coord(levels, c);  // validates
  (void)index;
  const int p = (c.pos + 1) / 2;
  const int q = is_upward(c) ? levels + 2 - c.row - p : levels + 1 - c.row - p;
  return LineCoord{c.row, p, q};
}

std::vector<int> cells_of_line(int levels, LineFamily family, int k) {
  check_levels(levels);
  check_line_index(levels, k);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * (levels - k) + 1));
  switch (family) {
    case LineFamily::row: {
      const int base = row_offset(levels, k);
      for (int c = 1; c <= row_width(levels, k); ++c) out.push_back(base + c);
      break;
    }
    case LineFamily::pos_diag: {
      for (int r = 1; r <= levels + 1 - k; ++r) {
        const int base = row_offset(levels, r);
        out.push_back(base + 2 * k - 1);
        if (2 * k <= row_width(levels, r)) out.push_back(base + 2 * k);
      }
      break;
    }
    case LineFamily::neg_diag: {
      for (int r = 1; r <= levels + 1 - k; ++r) {
        const int base = row_offset(levels, r);
        const int up_pos = row_width(levels, r) - 2 * (k - 1);
        if (up_pos - 1 >= 1) out.push_back(base + up_pos - 1);
        out.push_back(base + up_pos);
      }
      break;
    }
  }
  return out;
}

LineTable::LineTable(int levels) : levels_(levels) {
  const auto cells = static_cast<std::size_t>(levels * levels);
  for (auto& v : line_of_) v.resize(cells);
  for (auto& f : lines_) f.resize(static_cast<std::size_t>(levels));
  for (int r = 1; r <= levels; ++r) {
    const int width = 2 * (levels - r) + 1;
    for (int c = 1; c <= width; ++c) {
      const int cell = row_offset(levels, r) + c - 1;  // 0-based
      const int p = (c + 1) / 2;
      const int q = (c % 2 == 1) ? levels + 2 - r - p : levels + 1 - r - p;
      line_of_[0][static_cast<std::size_t>(cell)] = r - 1;
      line_of_[1][static_cast<std::size_t>(cell)] = p - 1;
      line_of_[2][static_cast<std::size_t>(cell)] = q - 1;
      lines_[0][static_cast<std::size_t>(r - 1)].push_back(cell);
      lines_[1][static_cast<std::size_t>(p - 1)].push_back(cell);
      lines_[2][static_cast<std::size_t>(q - 1)].push_back(cell);
    }
  }
}

const LineTable& LineTable::get(int levels) {
  check_levels(levels);
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<const LineTable>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[levels];
  if (!slot) slot.reset(new LineTable(levels));
  return *slot;
}

void validate_entries(int levels, std::span<const int> entries) {
  check_levels(levels);
  const int cells = levels * levels;
  if (entries.size() != static_cast<std::size_t>(cells)) {
    throw std::invalid_argument("expected " + std::to_string(cells) + " entries, got " +
                                std::to_string(entries.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(cells) + 1, false);
  for (int v : entries) {
    if (v < 1 || v > cells) {
      throw std::invalid_argument("entry " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(cells));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("duplicate entry " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= cells; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("missing entry " + std::to_string(v));
    }
  }
}

TriangleArrangement::TriangleArrangement(int levels, std::vector<int> entries)
    : levels_(levels), entries_(std::move(entries)) {
  validate_entries(levels_, entries_);
}

TriangleArrangement::TriangleArrangement(Unchecked, int levels, std::vector<int> entries)
    : levels_(levels), entries_(std::move(entries)) {}

TriangleArrangement TriangleArrangement::unchecked(int levels, std::vector<int> entries) {
  return TriangleArrangement(Unchecked{}, levels, std::move(entries));
}

int TriangleArrangement::value_at(int index) const {
  if (index < 1 || index > cell_count()) {
    throw std::out_of_range("flat index " + std::to_string(index) + " out of range");
  }
  return entries_[static_cast<std::size_t>(index - 1)];
}

PairedSums paired_sums(const TriangleArrangement& t) {
  const auto& table = LineTable::get(t.levels());
  const auto entries = t.entries();
  const int n = t.levels();
  PairedSums out;
  out.levels = n;
  out.magic = magic_constant(n);
  std::array<std::vector<std::int64_t>*, 3> raw = {&out.row_sums, &out.pos_diag_sums,
                                                   &out.neg_diag_sums};
  std::array<std::vector<std::int64_t>*, 3> paired = {&out.h, &out.p, &out.q};
  for (int f = 0; f < 3; ++f) {
    auto& sums = *raw[static_cast<std::size_t>(f)];
    sums.assign(static_cast<std::size_t>(n), 0);
    for (int line = 0; line < n; ++line) {
      std::int64_t s = 0;
      for (int cell : table.line_cells(static_cast<LineFamily>(f), line)) {
        s += entries[static_cast<std::size_t>(cell)];
      }
      sums[static_cast<std::size_t>(line)] = s;
    }
    auto& pr = *paired[static_cast<std::size_t>(f)];
    pr.resize(static_cast<std::size_t>(table.pair_count()));
    for (int k = 0; k < table.pair_count(); ++k) {
      pr[static_cast<std::size_t>(k)] =
          sums[static_cast<std::size_t>(k)] + sums[static_cast<std::size_t>(n - 1 - k)];
    }
  }
  return out;
}

bool is_magic(int levels, std::span<const int> entries) {
  const auto& table = LineTable::get(levels);
  const std::int64_t target = magic_constant(levels);
  for (int f = 0; f < 3; ++f) {
    const auto family = static_cast<LineFamily>(f);
    for (int k = 0; k < table.pair_count(); ++k) {
      std::int64_t s = 0;
      for (int cell : table.line_cells(family, k)) s += entries[static_cast<std::size_t>(cell)];
      const int other = levels - 1 - k;
      if (other == k) {
        s *= 2;
      } else {
        for (int cell : table.line_cells(family, other)) {
          s += entries[static_cast<std::size_t>(cell)];
        }
      }
      if (s != target) return false;
    }
  }
  return true;
}

bool is_magic(const TriangleArrangement& t) { return is_magic(t.levels(), t.entries()); }

}  // namespace magictri
