#pragma once

#include <array>
#include <span>
#include <vector>

#include "magictri/triangle.hpp"

namespace magictri {

// The symmetry group of the triangle: two rotations, three reflections and
// the identity. Elements act on cells through their line coordinates; every
// element permutes the (row, pos_diag, neg_diag) slots, which preserves the
// coordinate-sum invariant and hence cell orientation. In particular the
// entries of positive diagonal d equal the entries of row d after rot120,
// and negative diagonal d equals row d after rot240.
enum class SymmetryElement : int {
  identity = 0,
  rot120,          // counterclockwise third turn
  rot240,          // clockwise third turn
  reflect,         // across the vertical altitude
  reflect_rot120,  // reflect after rot120
  reflect_rot240,  // reflect after rot240
};

inline constexpr std::array<SymmetryElement, 6> kAllSymmetries = {
    SymmetryElement::identity,       SymmetryElement::rot120,
    SymmetryElement::rot240,         SymmetryElement::reflect,
    SymmetryElement::reflect_rot120, SymmetryElement::reflect_rot240,
};

const char* symmetry_name(SymmetryElement g);

/// Group product: compose(g, h) applies h first, then g.
SymmetryElement compose(SymmetryElement g, SymmetryElement h);
SymmetryElement inverse(SymmetryElement g);

// Cached per-level cell permutations of the six elements.
class SymmetryTable {
 public:
  static const SymmetryTable& get(int levels);

  int levels() const { return levels_; }
  /// dest(g)[c] is the 0-based destination cell of 0-based cell c under g.
  std::span<const int> dest(SymmetryElement g) const {
    return dest_[static_cast<std::size_t>(g)];
  }

  SymmetryTable(const SymmetryTable&) = delete;
  SymmetryTable& operator=(const SymmetryTable&) = delete;

 private:
  explicit SymmetryTable(int levels);

  int levels_;
  std::array<std::vector<int>, 6> dest_;
};

TriangleArrangement apply(SymmetryElement g, const TriangleArrangement& t);

/// The six images of an arrangement, indexed like kAllSymmetries.
std::array<TriangleArrangement, 6> orbit(const TriangleArrangement& t);

/// Lexicographically smallest entry sequence among the six images.
TriangleArrangement canonical(const TriangleArrangement& t);
std::vector<int> canonical_entries(int levels, std::span<const int> entries);

enum class PositionClass : int { corner = 0, border, interior, center };

inline constexpr std::array<PositionClass, 4> kAllPositionClasses = {
    PositionClass::corner, PositionClass::border, PositionClass::interior,
    PositionClass::center};

const char* position_class_name(PositionClass c);

// Symmetry classes of cells. Labels are constant on orbits of the group
// action; orbit_ids gives the exact orbit partition (each orbit named by its
// smallest 0-based member).
struct PositionClasses {
  int levels = 0;
  std::vector<PositionClass> labels;  // per 0-based cell
  std::vector<int> orbit_ids;         // per 0-based cell

  PositionClass label_of(int index) const {  // 1-based flat index
    return labels[static_cast<std::size_t>(index - 1)];
  }
  /// Ascending 1-based flat indices carrying a label.
  std::vector<int> cells_in_class(PositionClass c) const;
};

// Label rule: the corner class is the orbit of cell 1; the cell whose three
// line coordinates coincide (present unless n is divisible by 3) is the
// center; remaining upward cells on the outer edges are border; everything
// else is interior. For 4 levels the three downward cells 4, 9 and 11 are
// border as well: each sits inside one of the three-cell edge blocks
// {3,4,5}, {8,9,13}, {11,12,15} that enter the magic sums as single units.
PositionClasses position_classes(int levels);

/// True when every sampled arrangement has six pairwise distinct images
/// (always the case for distinct entries when levels >= 2; a single-cell
/// triangle is fixed by the whole group, so levels == 1 returns false).
bool verify_free_action(int levels, std::span<const TriangleArrangement> sample);

}  // namespace magictri
