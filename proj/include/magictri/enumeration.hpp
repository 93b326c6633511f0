#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "magictri/symmetry.hpp"
#include "magictri/triangle.hpp"

namespace magictri {

// Exact counting and enumeration of magic triangles for up to four levels.
// Counts "up to symmetry" quotient the free six-element group action; the
// raw count is six times larger for levels >= 2.

enum class CountMethod : int { closed_form, brute_force, hexagon };

const char* count_method_name(CountMethod m);

struct CountResult {
  int levels = 0;
  std::uint64_t up_to_symmetry = 0;
  std::uint64_t raw = 0;
  CountMethod method = CountMethod::closed_form;
};

/// All magic arrangements of 1..n^2, found by scanning every permutation.
/// Feasible for levels <= 3 (at most 9! arrangements).
std::vector<TriangleArrangement> brute_force_magic(int levels);

/// Count via the permutation scan; levels <= 3.
CountResult brute_force_count(int levels);

/// The four 2-level magic triangles in canonical form, ascending.
std::vector<TriangleArrangement> enumerate_2level();

// A solution of the 3-level hexagon equations: values at flat cells
// 2,3,4,6,7,8 (the cells left when the corners 1, 5, 9 are removed) with
//   v(6)+v(7)+v(8) = v(3)+v(4)+v(8) = v(2)+v(3)+v(6) = 15.
// The ordered form additionally has v(3) < v(6) < v(8), which picks one
// solution per hexagon-symmetry class.
struct Hexagon3Solution {
  std::array<int, 6> cells{};  // values at flat cells 2, 3, 4, 6, 7, 8

  friend bool operator==(const Hexagon3Solution&, const Hexagon3Solution&) = default;
  friend auto operator<=>(const Hexagon3Solution&, const Hexagon3Solution&) = default;
};

std::vector<Hexagon3Solution> hexagon3_solutions(bool ordered);

/// Fills the corners with the three unused values in ascending order
/// (cells 1 < 5 < 9); the result is magic.
TriangleArrangement extend_hexagon3(const Hexagon3Solution& s);

/// Streams the 96 3-level magic triangles, one canonical representative per
/// symmetry class, in a deterministic order.
void enumerate_3level(const std::function<void(const TriangleArrangement&)>& sink);

// A solution of the 4-level hexagon constraints: thirteen of 1..16 assigned
// to the non-corner cells so that the three middle paired sums equal 68.
// With row 1 = cells 1..7, row 2 = 8..12, row 3 = 13..15 and apex 16:
//   h2 = sum(left)+sum(right)+center+down_top              (rows 2+3)
//   p2 = sum(bottom)+sum(right)+down_right+center          (pos diagonals 2+3)
//   q2 = sum(bottom)+sum(left)+down_left+center            (neg diagonals 2+3)
// The ordered form keeps each block ascending and down_left < down_right <
// down_top, selecting one representative per block permutation and hexagon
// placement; each ordered solution stands for 6^4 magic triangles.
struct Hexagon4Solution {
  std::array<int, 3> bottom{};  // cells 3, 4, 5, ascending
  std::array<int, 3> left{};    // cells 8, 9, 13, ascending
  std::array<int, 3> right{};   // cells 11, 12, 15, ascending
  int down_left = 0;            // cell 2
  int down_right = 0;           // cell 6
  int down_top = 0;             // cell 14
  int center = 0;               // cell 10

  friend bool operator==(const Hexagon4Solution&, const Hexagon4Solution&) = default;
  friend auto operator<=>(const Hexagon4Solution&, const Hexagon4Solution&) = default;
};

/// The three values not used by the thirteen hexagon cells, ascending.
std::array<int, 3> hexagon4_corner_values(const Hexagon4Solution& s);

/// Corner values placed ascending at cells 1 < 7 < 16; the result is magic.
TriangleArrangement extend_hexagon4(const Hexagon4Solution& s);

/// Size of the constrained assignment space the searches cover:
/// C(16,13) * 13! / 6^4 = 2,690,688,000.
std::uint64_t hexagon4_candidate_space();

// Both searches split their outermost loop into fixed blocks so that a run
// can be restricted to a slice and partitioned across threads; counts from
// disjoint slices add up to the full count.
struct SearchSlice {
  int begin = 0;
  int end = -1;  // -1 means the full range
};

/// Blocks of the group-sum search: one per (center value, interior triple).
int hexagon4_group_block_count();
/// Blocks of the direct scan: one per left-block value triple.
int hexagon4_direct_block_count();

/// Counts ordered solutions by solving for the three block sums per outer
/// combination and counting disjoint realizations. The optional sink
/// receives every solution; with threads > 1 the sink order is unspecified
/// but the solution multiset is fixed.
std::uint64_t hexagon4_search(
    int threads = 1, const std::function<void(const Hexagon4Solution&)>& sink = {},
    SearchSlice slice = {});

/// Verification mode: scans the constrained assignment space directly,
/// checking the three 68-sums and abandoning partial assignments that
/// already exceed them. Slower than hexagon4_search but independent of the
/// block-sum bookkeeping. block_done, if set, is called after each finished
/// block, possibly from worker threads.
std::uint64_t hexagon4_direct_count(int threads = 1, SearchSlice slice = {},
                                    const std::function<void()>& block_done = {});

/// Exact count of magic triangles up to symmetry. levels <= 4; five and more
/// levels are rejected (the raw space alone exceeds 10^25 arrangements).
CountResult count_magic(int levels, int threads = 1);

// Distribution of each value over the position classes: counts[v-1][c] is
// the number of magic triangles, up to symmetry, in which value v sits in a
// cell of class c. Rows sum to the total count.
struct DistributionTable {
  int levels = 0;
  std::uint64_t total = 0;
  std::vector<std::array<std::uint64_t, 4>> counts;  // [value-1][PositionClass]
};

/// levels 3 or 4. The 4-level table is tallied per hexagon solution with
/// weight 6^4; the 238,536,576 triangles are never materialized.
DistributionTable distribution(int levels, int threads = 1);

/// Streams 4-level magic triangles (canonical forms, deterministic order),
/// expanding each hexagon solution into its 6^4 representatives; stops after
/// limit triangles (0 means no limit).
void enumerate_4level(const std::function<void(const TriangleArrangement&)>& sink,
                      std::uint64_t limit = 0);

}  // namespace magictri
