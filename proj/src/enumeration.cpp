#include "magictri/enumeration.hpp"

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace magictri {

namespace {

using Sink4 = std::function<void(const Hexagon4Solution&)>;

constexpr int kTarget4 = 68;  // magic_constant(4)

// ---- shared partitioning helpers -----------------------------------------

int clamp_begin(const SearchSlice& slice, int blocks) {
  return std::clamp(slice.begin, 0, blocks);
}

int clamp_end(const SearchSlice& slice, int begin, int blocks) {
  if (slice.end < 0) return blocks;
  return std::clamp(slice.end, begin, blocks);
}

// Runs range_count over [begin, end) split into contiguous chunks, one per
// thread, and adds up the per-chunk counts.
std::uint64_t partitioned_count(int begin, int end, int threads,
                                const std::function<std::uint64_t(int, int)>& range_count) {
  const int total = end - begin;
  if (total <= 0) return 0;
  threads = std::max(1, std::min(threads, total));
  if (threads == 1) return range_count(begin, end);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const int chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int b = begin + t * chunk;
    const int e = std::min(end, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&, t, b, e] { partial[static_cast<std::size_t>(t)] = range_count(b, e); });
  }
  for (auto& w : workers) w.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

}  // namespace

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::closed_form: return "closed-form";
    case CountMethod::brute_force: return "brute-force";
    case CountMethod::hexagon: return "hexagon";
  }
  return "?";
}

// ---- brute force ----------------------------------------------------------

std::vector<TriangleArrangement> brute_force_magic(int levels) {
  if (levels < 1 || levels > 3) {
    throw std::invalid_argument("brute force scans all (n^2)! arrangements; levels must be 1..3");
  }
  std::vector<int> perm(static_cast<std::size_t>(levels * levels));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<TriangleArrangement> out;
  do {
    if (is_magic(levels, perm)) out.push_back(TriangleArrangement::unchecked(levels, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CountResult brute_force_count(int levels) {
  const auto raw = brute_force_magic(levels);
  if (levels == 1) return CountResult{1, 1, 1, CountMethod::brute_force};
  if (!verify_free_action(levels, raw)) {
    throw std::logic_error("symmetry action is not free on the magic arrangements");
  }
  return CountResult{levels, raw.size() / 6, raw.size(), CountMethod::brute_force};
}

// ---- two levels -----------------------------------------------------------

std::vector<TriangleArrangement> enumerate_2level() {
  // Every 2-level arrangement is magic: the single paired sum in each family
  // covers all four cells. The canonical forms of the 24 permutations are
  // the four representatives.
  std::vector<int> perm = {1, 2, 3, 4};
  std::set<std::vector<int>> canon;
  do {
    canon.insert(canonical_entries(2, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<TriangleArrangement> out;
  out.reserve(canon.size());
  for (const auto& e : canon) out.push_back(TriangleArrangement::unchecked(2, e));
  return out;
}

// ---- three levels ---------------------------------------------------------

std::vector<Hexagon3Solution> hexagon3_solutions(bool ordered) {
  std::vector<Hexagon3Solution> out;
  for (int v3 = 1; v3 <= 9; ++v3) {
    for (int v6 = ordered ? v3 + 1 : 1; v6 <= 9; ++v6) {
      if (v6 == v3) continue;
      for (int v8 = ordered ? v6 + 1 : 1; v8 <= 9; ++v8) {
        if (v8 == v3 || v8 == v6) continue;
        // The three 15-sums pin the remaining cells.
        const int v2 = 15 - v3 - v6;
        const int v4 = 15 - v3 - v8;
        const int v7 = 15 - v6 - v8;
        if (v2 < 1 || v2 > 9 || v4 < 1 || v4 > 9 || v7 < 1 || v7 > 9) continue;
        unsigned mask = 0;
        bool distinct = true;
        for (int v : {v2, v3, v4, v6, v7, v8}) {
          if (mask & (1u << v)) {
            distinct = false;
            break;
          }
          mask |= 1u << v;
        }
        if (!distinct) continue;
        out.push_back(Hexagon3Solution{{v2, v3, v4, v6, v7, v8}});
      }
    }
  }
  return out;
}

TriangleArrangement extend_hexagon3(const Hexagon3Solution& s) {
  std::vector<int> entries(9, 0);
  entries[1] = s.cells[0];  // cell 2
  entries[2] = s.cells[1];  // cell 3
  entries[3] = s.cells[2];  // cell 4
  entries[5] = s.cells[3];  // cell 6
  entries[6] = s.cells[4];  // cell 7
  entries[7] = s.cells[5];  // cell 8
  unsigned mask = 0;
  for (int v : s.cells) mask |= 1u << v;
  std::array<int, 3> corners{};
  int k = 0;
  for (int v = 1; v <= 9; ++v) {
    if (!(mask & (1u << v))) corners[static_cast<std::size_t>(k++)] = v;
  }
  if (k != 3) throw std::invalid_argument("hexagon solution does not use six distinct values");
  entries[0] = corners[0];  // cell 1
  entries[4] = corners[1];  // cell 5
  entries[8] = corners[2];  // cell 9
  return TriangleArrangement::unchecked(3, std::move(entries));
}

void enumerate_3level(const std::function<void(const TriangleArrangement&)>& sink) {
  for (const auto& s : hexagon3_solutions(false)) {
    sink(canonical(extend_hexagon3(s)));
  }
}

// ---- four levels: group-sum search ----------------------------------------

namespace {

// Outer combination of the search: the center value and the ascending
// interior triple (down_left < down_right < down_top).
struct OuterCombo {
  std::uint8_t center, dl, dr, dt;
};

const std::vector<OuterCombo>& outer_combos() {
  static const std::vector<OuterCombo> combos = [] {
    std::vector<OuterCombo> v;
    for (int m = 1; m <= 16; ++m) {
      for (int x = 1; x <= 16; ++x) {
        if (x == m) continue;
        for (int y = x + 1; y <= 16; ++y) {
          if (y == m) continue;
          for (int z = y + 1; z <= 16; ++z) {
            if (z == m) continue;
            v.push_back(OuterCombo{static_cast<std::uint8_t>(m), static_cast<std::uint8_t>(x),
                                   static_cast<std::uint8_t>(y), static_cast<std::uint8_t>(z)});
          }
        }
      }
    }
    return v;
  }();
  return combos;
}

// The 220 three-element index subsets of a 12-value pool, as bit masks.
struct TripleChoice {
  std::uint16_t mask;
  std::uint8_t i, j, k;
};

const std::vector<TripleChoice>& pool_triples() {
  static const std::vector<TripleChoice> triples = [] {
    std::vector<TripleChoice> v;
    for (int i = 0; i < 12; ++i) {
      for (int j = i + 1; j < 12; ++j) {
        for (int k = j + 1; k < 12; ++k) {
          v.push_back(TripleChoice{static_cast<std::uint16_t>((1u << i) | (1u << j) | (1u << k)),
                                   static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                   static_cast<std::uint8_t>(k)});
        }
      }
    }
    return v;
  }();
  return triples;
}

struct GroupScratch {
  std::array<std::vector<std::uint16_t>, 46> by_sum;  // block sums range 6..45
};

std::array<int, 3> mask_values(const int* pool, std::uint16_t mask) {
  std::array<int, 3> out{};
  int k = 0;
  for (int b = 0; b < 12; ++b) {
    if (mask & (1u << b)) out[static_cast<std::size_t>(k++)] = pool[b];
  }
  return out;
}

// Counts ordered solutions for one outer combination. The three 68-sums fix
// the three block sums exactly, so it remains to count disjoint block
// realizations among the twelve unused values.
std::uint64_t scan_combo(const OuterCombo& oc, const Sink4* sink, GroupScratch& scratch) {
  const int needed_h = kTarget4 - oc.center - oc.dt;   // sum(left) + sum(right)
  const int needed_p = kTarget4 - oc.center - oc.dr;   // sum(bottom) + sum(right)
  const int needed_q = kTarget4 - oc.center - oc.dl;   // sum(bottom) + sum(left)
  const int two_bottom = needed_p + needed_q - needed_h;
  if (two_bottom < 0 || two_bottom % 2 != 0) return 0;
  const int sum_bottom = two_bottom / 2;
  const int sum_left = needed_q - sum_bottom;
  const int sum_right = needed_p - sum_bottom;
  if (sum_bottom < 6 || sum_bottom > 45 || sum_left < 6 || sum_left > 45 || sum_right < 6 ||
      sum_right > 45) {
    return 0;
  }

  int pool[12];
  int np = 0;
  for (int v = 1; v <= 16; ++v) {
    if (v == oc.center || v == oc.dl || v == oc.dr || v == oc.dt) continue;
    pool[np++] = v;
  }

  for (auto& bucket : scratch.by_sum) bucket.clear();
  for (const auto& t : pool_triples()) {
    const int s = pool[t.i] + pool[t.j] + pool[t.k];
    scratch.by_sum[static_cast<std::size_t>(s)].push_back(t.mask);
  }

  const auto& bottoms = scratch.by_sum[static_cast<std::size_t>(sum_bottom)];
  const auto& lefts = scratch.by_sum[static_cast<std::size_t>(sum_left)];
  const auto& rights = scratch.by_sum[static_cast<std::size_t>(sum_right)];
  std::uint64_t count = 0;
  for (const std::uint16_t mb : bottoms) {
    for (const std::uint16_t ml : lefts) {
      if (mb & ml) continue;
      const std::uint16_t used = mb | ml;
      for (const std::uint16_t mr : rights) {
        if (mr & used) continue;
        ++count;
        if (sink) {
          Hexagon4Solution s;
          s.bottom = mask_values(pool, mb);
          s.left = mask_values(pool, ml);
          s.right = mask_values(pool, mr);
          s.down_left = oc.dl;
          s.down_right = oc.dr;
          s.down_top = oc.dt;
          s.center = oc.center;
          (*sink)(s);
        }
      }
    }
  }
  return count;
}

}  // namespace

std::array<int, 3> hexagon4_corner_values(const Hexagon4Solution& s) {
  unsigned mask = 0;
  for (int v : s.bottom) mask |= 1u << v;
  for (int v : s.left) mask |= 1u << v;
  for (int v : s.right) mask |= 1u << v;
  mask |= 1u << s.down_left;
  mask |= 1u << s.down_right;
  mask |= 1u << s.down_top;
  mask |= 1u << s.center;
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 1; v <= 16; ++v) {
    if (!(mask & (1u << v))) {
      if (k == 3) throw std::invalid_argument("hexagon solution uses fewer than 13 values");
      out[static_cast<std::size_t>(k++)] = v;
    }
  }
  if (k != 3) throw std::invalid_argument("hexagon solution uses fewer than 13 values");
  return out;
}

TriangleArrangement extend_hexagon4(const Hexagon4Solution& s) {
  std::vector<int> entries(16, 0);
  entries[2] = s.bottom[0];
  entries[3] = s.bottom[1];
  entries[4] = s.bottom[2];
  entries[7] = s.left[0];
  entries[8] = s.left[1];
  entries[12] = s.left[2];
  entries[10] = s.right[0];
  entries[11] = s.right[1];
  entries[14] = s.right[2];
  entries[1] = s.down_left;
  entries[5] = s.down_right;
  entries[13] = s.down_top;
  entries[9] = s.center;
  const auto corners = hexagon4_corner_values(s);
  entries[0] = corners[0];
  entries[6] = corners[1];
  entries[15] = corners[2];
  return TriangleArrangement::unchecked(4, std::move(entries));
}

std::uint64_t hexagon4_candidate_space() {
  // C(16,13) placements of three leftover corner values times 13! block
  // assignments, divided by the 6^4 symmetries the ordered form quotients.
  const std::uint64_t choose = 560;           // C(16,3)
  const std::uint64_t fact13 = 6227020800ULL;  // 13!
  return choose * (fact13 / 1296);
}

int hexagon4_group_block_count() { return static_cast<int>(outer_combos().size()); }

std::uint64_t hexagon4_search(int threads, const Sink4& sink, SearchSlice slice) {
  const auto& combos = outer_combos();
  const int blocks = static_cast<int>(combos.size());
  const int begin = clamp_begin(slice, blocks);
  const int end = clamp_end(slice, begin, blocks);

  if (threads <= 1 || !(end - begin > 1)) {
    GroupScratch scratch;
    const Sink4* sp = sink ? &sink : nullptr;
    std::uint64_t count = 0;
    for (int i = begin; i < end; ++i) {
      count += scan_combo(combos[static_cast<std::size_t>(i)], sp, scratch);
    }
    return count;
  }

  std::mutex sink_mu;
  Sink4 locked;
  if (sink) {
    locked = [&sink, &sink_mu](const Hexagon4Solution& s) {
      std::scoped_lock lock(sink_mu);
      sink(s);
    };
  }
  const Sink4* sp = locked ? &locked : nullptr;
  return partitioned_count(begin, end, threads, [&combos, sp](int b, int e) {
    GroupScratch scratch;
    std::uint64_t count = 0;
    for (int i = b; i < e; ++i) {
      count += scan_combo(combos[static_cast<std::size_t>(i)], sp, scratch);
    }
    return count;
  });
}

// ---- four levels: direct verification scan ---------------------------------

namespace {

struct ValueTriple {
  std::uint8_t a, b, c;
};

const std::vector<ValueTriple>& left_block_triples() {
  static const std::vector<ValueTriple> triples = [] {
    std::vector<ValueTriple> v;
    for (int a = 1; a <= 16; ++a) {
      for (int b = a + 1; b <= 16; ++b) {
        for (int c = b + 1; c <= 16; ++c) {
          v.push_back(ValueTriple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                  static_cast<std::uint8_t>(c)});
        }
      }
    }
    return v;
  }();
  return triples;
}

// Scans the constrained assignment space for left-block triples in
// [b_begin, b_end): choose the left and right blocks, then the center, then
// close the middle row sum, then the interior cells, then the bottom block,
// checking the two diagonal sums last. Partial assignments are abandoned as
// soon as a 68-sum can no longer be met without repeating a value.
std::uint64_t direct_scan_range(int b_begin, int b_end) {
  const auto& triples = left_block_triples();
  std::uint64_t count = 0;
  for (int bi = b_begin; bi < b_end; ++bi) {
    const ValueTriple left = triples[static_cast<std::size_t>(bi)];
    const int sum_left = left.a + left.b + left.c;
    std::uint32_t used_left = (1u << left.a) | (1u << left.b) | (1u << left.c);

    int rem13[13];
    int n13 = 0;
    for (int v = 1; v <= 16; ++v) {
      if (!(used_left & (1u << v))) rem13[n13++] = v;
    }

    for (int i = 0; i < 13; ++i) {
      for (int j = i + 1; j < 13; ++j) {
        for (int k = j + 1; k < 13; ++k) {
          const int r1 = rem13[i], r2 = rem13[j], r3 = rem13[k];
          const int sum_right = r1 + r2 + r3;
          if (sum_left + sum_right + 3 > kTarget4) continue;  // center+down_top >= 3

          int rem10[10];
          int n10 = 0;
          for (int t = 0; t < 13; ++t) {
            if (t != i && t != j && t != k) rem10[n10++] = rem13[t];
          }

          for (int ci = 0; ci < 10; ++ci) {
            const int center = rem10[ci];
            const int base_h = sum_left + sum_right + center;
            if (base_h + 1 > kTarget4) continue;
            for (int ti = 0; ti < 10; ++ti) {
              if (ti == ci) continue;
              const int down_top = rem10[ti];
              if (base_h + down_top != kTarget4) continue;  // middle row sum closes here
              for (int ri = 0; ri < 10; ++ri) {
                if (ri == ci || ri == ti) continue;
                const int down_right = rem10[ri];
                if (down_right >= down_top) continue;
                const int partial_p = sum_right + center + down_right;
                if (partial_p + 6 > kTarget4) continue;  // bottom block sums at least 1+2+3
                for (int li = 0; li < 10; ++li) {
                  if (li == ci || li == ti || li == ri) continue;
                  const int down_left = rem10[li];
                  if (down_left >= down_right) continue;
                  const int partial_q = sum_left + center + down_left;
                  if (partial_q + 6 > kTarget4) continue;

                  int rem6[6];
                  int n6 = 0;
                  for (int t = 0; t < 10; ++t) {
                    if (t != ci && t != ti && t != ri && t != li) rem6[n6++] = rem10[t];
                  }
                  for (int x = 0; x < 6; ++x) {
                    for (int y = x + 1; y < 6; ++y) {
                      for (int z = y + 1; z < 6; ++z) {
                        const int sum_bottom = rem6[x] + rem6[y] + rem6[z];
                        if (partial_p + sum_bottom == kTarget4 &&
                            partial_q + sum_bottom == kTarget4) {
                          ++count;
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return count;
}

}  // namespace

int hexagon4_direct_block_count() { return static_cast<int>(left_block_triples().size()); }

std::uint64_t hexagon4_direct_count(int threads, SearchSlice slice,
                                    const std::function<void()>& block_done) {
  const int blocks = hexagon4_direct_block_count();
  const int begin = clamp_begin(slice, blocks);
  const int end = clamp_end(slice, begin, blocks);
  if (!block_done) return partitioned_count(begin, end, threads, direct_scan_range);
  return partitioned_count(begin, end, threads, [&block_done](int b, int e) {
    std::uint64_t sum = 0;
    for (int i = b; i < e; ++i) {
      sum += direct_scan_range(i, i + 1);
      block_done();
    }
    return sum;
  });
}

// ---- counting and distribution ---------------------------------------------

CountResult count_magic(int levels, int threads) {
  if (levels < 1) {
    throw std::invalid_argument("levels must be positive, got " + std::to_string(levels));
  }
  switch (levels) {
    case 1:
      return CountResult{1, 1, 1, CountMethod::closed_form};
    case 2:
      // All 4! arrangements are magic; the action is free.
      return CountResult{2, 4, 24, CountMethod::closed_form};
    case 3: {
      const auto n = static_cast<std::uint64_t>(hexagon3_solutions(false).size());
      return CountResult{3, n, n * 6, CountMethod::hexagon};
    }
    case 4: {
      const std::uint64_t solutions = hexagon4_search(threads);
      const std::uint64_t up_to_symmetry = solutions * 6 * 6 * 6 * 6;
      return CountResult{4, up_to_symmetry, up_to_symmetry * 6, CountMethod::hexagon};
    }
    default:
      throw std::invalid_argument(
          "exact counting beyond 4 levels is infeasible: 5 levels already has 25!/6 > 10^24 "
          "arrangements up to symmetry");
  }
}

DistributionTable distribution(int levels, int threads) {
  if (levels != 3 && levels != 4) {
    throw std::invalid_argument("distribution tables exist for 3 or 4 levels only");
  }
  const auto classes = position_classes(levels);
  DistributionTable table;
  table.levels = levels;
  table.counts.assign(static_cast<std::size_t>(levels * levels), {0, 0, 0, 0});

  if (levels == 3) {
    std::uint64_t total = 0;
    enumerate_3level([&](const TriangleArrangement& t) {
      ++total;
      const auto entries = t.entries();
      for (std::size_t cell = 0; cell < entries.size(); ++cell) {
        const auto v = static_cast<std::size_t>(entries[cell] - 1);
        table.counts[v][static_cast<std::size_t>(classes.labels[cell])] += 1;
      }
    });
    table.total = total;
    return table;
  }

  // Class membership of every value is decided by the hexagon solution
  // alone: block cells are border, the interior triple interior, the center
  // cell center and the three leftover values corners, whichever of the 6^4
  // expansions is taken. Tally solutions with that weight.
  constexpr std::uint64_t kWeight = 6 * 6 * 6 * 6;
  const auto corner = static_cast<std::size_t>(PositionClass::corner);
  const auto border = static_cast<std::size_t>(PositionClass::border);
  const auto interior = static_cast<std::size_t>(PositionClass::interior);
  const auto center = static_cast<std::size_t>(PositionClass::center);
  std::uint64_t solutions = hexagon4_search(threads, [&](const Hexagon4Solution& s) {
    for (int v : s.bottom) table.counts[static_cast<std::size_t>(v - 1)][border] += kWeight;
    for (int v : s.left) table.counts[static_cast<std::size_t>(v - 1)][border] += kWeight;
    for (int v : s.right) table.counts[static_cast<std::size_t>(v - 1)][border] += kWeight;
    table.counts[static_cast<std::size_t>(s.down_left - 1)][interior] += kWeight;
    table.counts[static_cast<std::size_t>(s.down_right - 1)][interior] += kWeight;
    table.counts[static_cast<std::size_t>(s.down_top - 1)][interior] += kWeight;
    table.counts[static_cast<std::size_t>(s.center - 1)][center] += kWeight;
    for (int v : hexagon4_corner_values(s)) {
      table.counts[static_cast<std::size_t>(v - 1)][corner] += kWeight;
    }
  });
  table.total = solutions * kWeight;
  return table;
}

// ---- full 4-level enumeration ----------------------------------------------

namespace {

struct StopEnumeration {};

const std::array<std::array<int, 3>, 6>& perms3() {
  static const std::array<std::array<int, 3>, 6> p = {{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};
  return p;
}

}  // namespace

void enumerate_4level(const std::function<void(const TriangleArrangement&)>& sink,
                      std::uint64_t limit) {
  // Block cells, 0-based: bottom {2,3,4}, left {7,8,12}, right {10,11,14}.
  static constexpr int kBottomCells[3] = {2, 3, 4};
  static constexpr int kLeftCells[3] = {7, 8, 12};
  static constexpr int kRightCells[3] = {10, 11, 14};
  static constexpr int kCornerCells[3] = {0, 6, 15};

  std::uint64_t emitted = 0;
  const auto expand = [&](const Hexagon4Solution& s) {
    const auto corners = hexagon4_corner_values(s);
    std::vector<int> base(16, 0);
    base[1] = s.down_left;
    base[5] = s.down_right;
    base[13] = s.down_top;
    base[9] = s.center;
    base[0] = corners[0];
    base[6] = corners[1];
    base[15] = corners[2];
    // One representative per hexagon placement and per block ordering: apply
    // the symmetry to the whole triangle, then re-pin the corner values
    // ascending. Distinct choices land in distinct symmetry classes.
    for (SymmetryElement g : kAllSymmetries) {
      for (const auto& pa : perms3()) {
        for (const auto& pb : perms3()) {
          for (const auto& pc : perms3()) {
            std::vector<int> entries = base;
            for (int t = 0; t < 3; ++t) {
              entries[static_cast<std::size_t>(kBottomCells[t])] =
                  s.bottom[static_cast<std::size_t>(pa[static_cast<std::size_t>(t)])];
              entries[static_cast<std::size_t>(kLeftCells[t])] =
                  s.left[static_cast<std::size_t>(pb[static_cast<std::size_t>(t)])];
              entries[static_cast<std::size_t>(kRightCells[t])] =
                  s.right[static_cast<std::size_t>(pc[static_cast<std::size_t>(t)])];
            }
            const auto dest = SymmetryTable::get(4).dest(g);
            std::vector<int> moved(16);
            for (std::size_t c = 0; c < 16; ++c) {
              moved[static_cast<std::size_t>(dest[c])] = entries[c];
            }
            std::array<int, 3> cv = {moved[0], moved[6], moved[15]};
            std::sort(cv.begin(), cv.end());
            for (int t = 0; t < 3; ++t) {
              moved[static_cast<std::size_t>(kCornerCells[t])] = cv[static_cast<std::size_t>(t)];
            }
            sink(TriangleArrangement::unchecked(4, canonical_entries(4, moved)));
            if (limit != 0 && ++emitted >= limit) throw StopEnumeration{};
          }
        }
      }
    }
  };
  try {
    hexagon4_search(1, expand);
  } catch (const StopEnumeration&) {
  }
}

}  // namespace magictri
