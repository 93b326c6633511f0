#include "magictri/symmetry.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace magictri {

namespace {

// Element g sends a cell with line coordinates x = (row, p, q) to the cell
// with coordinates x' where x'[i] = x[kSigma[g][i]].
constexpr int kSigma[6][3] = {
    {0, 1, 2},  // identity
    {1, 2, 0},  // rot120: positive diagonals become rows
    {2, 0, 1},  // rot240: negative diagonals become rows
    {0, 2, 1},  // reflect: the two diagonal families swap
    {1, 0, 2},  // reflect_rot120
    {2, 1, 0},  // reflect_rot240
};

struct ComposeTables {
  int product[6][6];
  int inverse[6];
};

ComposeTables build_compose_tables() {
  ComposeTables t{};
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      int sigma[3];
      for (int i = 0; i < 3; ++i) sigma[i] = kSigma[h][kSigma[g][i]];
      int found = -1;
      for (int e = 0; e < 6; ++e) {
        if (sigma[0] == kSigma[e][0] && sigma[1] == kSigma[e][1] && sigma[2] == kSigma[e][2]) {
          found = e;
          break;
        }
      }
      t.product[g][h] = found;
      if (found == 0) t.inverse[g] = h;
    }
  }
  return t;
}

const ComposeTables& compose_tables() {
  static const ComposeTables t = build_compose_tables();
  return t;
}

}  // namespace

const char* symmetry_name(SymmetryElement g) {
  switch (g) {
    case SymmetryElement::identity: return "identity";
    case SymmetryElement::rot120: return "rot120";
    case SymmetryElement::rot240: return "rot240";
    case SymmetryElement::reflect: return "reflect";
    case SymmetryElement::reflect_rot120: return "reflect_rot120";
    case SymmetryElement::reflect_rot240: return "reflect_rot240";
  }
  return "?";
}

SymmetryElement compose(SymmetryElement g, SymmetryElement h) {
  return static_cast<SymmetryElement>(
      compose_tables().product[static_cast<int>(g)][static_cast<int>(h)]);
}

SymmetryElement inverse(SymmetryElement g) {
  return static_cast<SymmetryElement>(compose_tables().inverse[static_cast<int>(g)]);
}

SymmetryTable::SymmetryTable(int levels) : levels_(levels) {
  const int cells = levels * levels;
  for (auto& v : dest_) v.resize(static_cast<std::size_t>(cells));
  for (int cell = 0; cell < cells; ++cell) {
    const CellCoord c = coord_of_index(levels, cell + 1);
    const LineCoord lc = line_coord(levels, c);
    const int x[3] = {lc.row, lc.pos_diag, lc.neg_diag};
    const bool up = is_upward(c);
    for (int g = 0; g < 6; ++g) {
      const int row = x[kSigma[g][0]];
      const int p = x[kSigma[g][1]];
      const int pos = up ? 2 * p - 1 : 2 * p;
      dest_[static_cast<std::size_t>(g)][static_cast<std::size_t>(cell)] =
          index_of_coord(levels, CellCoord{row, pos}) - 1;
    }
  }
}

const SymmetryTable& SymmetryTable::get(int levels) {
  if (levels < 1) {
    throw std::invalid_argument("levels must be positive, got " + std::to_string(levels));
  }
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<const SymmetryTable>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[levels];
  if (!slot) slot.reset(new SymmetryTable(levels));
  return *slot;
}

TriangleArrangement apply(SymmetryElement g, const TriangleArrangement& t) {
  const auto dest = SymmetryTable::get(t.levels()).dest(g);
  const auto in = t.entries();
  std::vector<int> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[static_cast<std::size_t>(dest[i])] = in[i];
  }
  return TriangleArrangement::unchecked(t.levels(), std::move(out));
}

std::array<TriangleArrangement, 6> orbit(const TriangleArrangement& t) {
  return {apply(SymmetryElement::identity, t),       apply(SymmetryElement::rot120, t),
          apply(SymmetryElement::rot240, t),         apply(SymmetryElement::reflect, t),
          apply(SymmetryElement::reflect_rot120, t), apply(SymmetryElement::reflect_rot240, t)};
}

std::vector<int> canonical_entries(int levels, std::span<const int> entries) {
  const auto& table = SymmetryTable::get(levels);
  std::vector<int> best;
  std::vector<int> image(entries.size());
  for (SymmetryElement g : kAllSymmetries) {
    const auto dest = table.dest(g);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      image[static_cast<std::size_t>(dest[i])] = entries[i];
    }
    if (best.empty() || image < best) best = image;
  }
  return best;
}

TriangleArrangement canonical(const TriangleArrangement& t) {
  return TriangleArrangement::unchecked(t.levels(), canonical_entries(t.levels(), t.entries()));
}

const char* position_class_name(PositionClass c) {
  switch (c) {
    case PositionClass::corner: return "corner";
    case PositionClass::border: return "border";
    case PositionClass::interior: return "interior";
    case PositionClass::center: return "center";
  }
  return "?";
}

std::vector<int> PositionClasses::cells_in_class(PositionClass c) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == c) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

PositionClasses position_classes(int levels) {
  const auto& sym = SymmetryTable::get(levels);
  const int cells = levels * levels;

  PositionClasses out;
  out.levels = levels;
  out.orbit_ids.resize(static_cast<std::size_t>(cells));
  for (int cell = 0; cell < cells; ++cell) {
    int smallest = cell;
    for (SymmetryElement g : kAllSymmetries) {
      smallest = std::min(smallest, sym.dest(g)[static_cast<std::size_t>(cell)]);
    }
    out.orbit_ids[static_cast<std::size_t>(cell)] = smallest;
  }

  out.labels.assign(static_cast<std::size_t>(cells), PositionClass::interior);
  for (int cell = 0; cell < cells; ++cell) {
    const auto i = static_cast<std::size_t>(cell);
    const CellCoord c = coord_of_index(levels, cell + 1);
    const LineCoord lc = line_coord(levels, c);
    if (out.orbit_ids[i] == out.orbit_ids[0]) {
      out.labels[i] = PositionClass::corner;
    } else if (lc.row == lc.pos_diag && lc.pos_diag == lc.neg_diag) {
      out.labels[i] = PositionClass::center;
    } else if (is_upward(c) && (lc.row == 1 || lc.pos_diag == 1 || lc.neg_diag == 1)) {
      out.labels[i] = PositionClass::border;
    }
  }
  if (levels == 4) {
    // The downward cells of the three-cell edge blocks count as border.
    out.labels[3] = out.labels[8] = out.labels[10] = PositionClass::border;
  }
  return out;
}

bool verify_free_action(int levels, std::span<const TriangleArrangement> sample) {
  if (levels < 2) return false;
  for (const auto& t : sample) {
    if (t.levels() != levels) {
      throw std::invalid_argument("sample arrangement has wrong level count");
    }
    const auto images = orbit(t);
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        if (images[a] == images[b]) return false;
      }
    }
  }
  return true;
}

}  // namespace magictri
