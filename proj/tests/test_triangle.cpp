#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "magictri/rng.hpp"
#include "magictri/triangle.hpp"

using namespace magictri;

namespace {

const std::vector<int> kP16 = {2, 15, 4, 7, 11, 16, 12, 14, 9, 3, 8, 13, 5, 10, 6, 1};
const std::vector<int> kI9 = {1, 2, 3, 4, 5, 6, 7, 8, 9};

}  // namespace

TEST_CASE("magic constant is n(n^2+1)") {
  CHECK(magic_constant(1) == 2);
  CHECK(magic_constant(2) == 10);
  CHECK(magic_constant(3) == 30);
  CHECK(magic_constant(4) == 68);
  CHECK(magic_constant(10) == 1010);
}

TEST_CASE("row widths and cell orientation") {
  CHECK(row_width(4, 1) == 7);
  CHECK(row_width(4, 4) == 1);
  CHECK(row_width(3, 2) == 3);
  CHECK(is_upward({1, 1}));
  CHECK_FALSE(is_upward({1, 2}));
  CHECK(is_upward({2, 3}));
}

TEST_CASE("flat index and coordinates invert each other") {
  CHECK(coord_of_index(4, 10) == CellCoord{2, 3});
  CHECK(index_of_coord(4, {2, 3}) == 10);
  CHECK(coord_of_index(4, 1) == CellCoord{1, 1});
  CHECK(coord_of_index(4, 16) == CellCoord{4, 1});
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n * n; ++i) {
      const CellCoord c = coord_of_index(n, i);
      CHECK(c.row >= 1);
      CHECK(c.row <= n);
      CHECK(c.pos >= 1);
      CHECK(c.pos <= row_width(n, c.row));
      CHECK(index_of_coord(n, c) == i);
    }
  }
}

TEST_CASE("line coordinates satisfy the row+p+q identity") {
  CHECK(line_coord(4, {2, 3}) == LineCoord{2, 2, 2});
  CHECK(line_coord(2, {1, 2}) == LineCoord{1, 1, 1});
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n * n; ++i) {
      const CellCoord c = coord_of_index(n, i);
      const LineCoord l = line_coord(n, c);
      const int expected = is_upward(c) ? n + 2 : n + 1;
      CHECK(l.row + l.pos_diag + l.neg_diag == expected);
    }
  }
}

TEST_CASE("line cells of the worked 4-level example") {
  CHECK(cells_of_line(4, LineFamily::row, 1) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(cells_of_line(4, LineFamily::row, 4) == std::vector<int>{16});
  CHECK(cells_of_line(4, LineFamily::pos_diag, 2) == std::vector<int>{3, 4, 10, 11, 15});
  CHECK(cells_of_line(4, LineFamily::neg_diag, 1) == std::vector<int>{6, 7, 11, 12, 14, 15, 16});
  CHECK(cells_of_line(3, LineFamily::pos_diag, 2) == std::vector<int>{3, 4, 8});
  CHECK(cells_of_line(3, LineFamily::neg_diag, 2) == std::vector<int>{2, 3, 6});
}

TEST_CASE("each line family partitions the cells") {
  for (int n = 1; n <= 9; ++n) {
    for (LineFamily f : kLineFamilies) {
      std::set<int> seen;
      for (int k = 1; k <= n; ++k) {
        const auto cells = cells_of_line(n, f, k);
        CHECK(static_cast<int>(cells.size()) == 2 * (n - k) + 1);
        CHECK(std::is_sorted(cells.begin(), cells.end()));
        seen.insert(cells.begin(), cells.end());
      }
      CHECK(static_cast<int>(seen.size()) == n * n);
      CHECK(*seen.begin() == 1);
      CHECK(*seen.rbegin() == n * n);
    }
  }
}

TEST_CASE("line table agrees with the coordinate functions") {
  for (int n = 1; n <= 6; ++n) {
    const LineTable& table = LineTable::get(n);
    CHECK(table.levels() == n);
    CHECK(table.cell_count() == n * n);
    CHECK(table.pair_count() == (n + 1) / 2);
    for (LineFamily f : kLineFamilies) {
      for (int k = 1; k <= n; ++k) {
        const auto expected = cells_of_line(n, f, k);
        const auto got = table.line_cells(f, k - 1);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
          CHECK(got[i] == expected[i] - 1);
          CHECK(table.line_of(f, expected[i] - 1) == k - 1);
        }
      }
    }
  }
}

TEST_CASE("line pairing and the odd middle line") {
  const LineTable& t3 = LineTable::get(3);
  CHECK(t3.pair_of(0) == 0);
  CHECK(t3.pair_of(2) == 0);
  CHECK(t3.pair_of(1) == 1);
  CHECK(t3.self_paired(1));
  CHECK_FALSE(t3.self_paired(0));
  const LineTable& t4 = LineTable::get(4);
  CHECK(t4.pair_of(0) == 0);
  CHECK(t4.pair_of(3) == 0);
  CHECK(t4.pair_of(1) == 1);
  CHECK(t4.pair_of(2) == 1);
  for (int l = 0; l < 4; ++l) CHECK_FALSE(t4.self_paired(l));
}

TEST_CASE("entry validation names the offending value") {
  CHECK_NOTHROW(validate_entries(3, kI9));
  const std::vector<int> dup = {1, 2, 2, 4};
  CHECK_THROWS_WITH_AS(validate_entries(2, dup), doctest::Contains("2"), std::invalid_argument);
  const std::vector<int> range = {1, 2, 3, 5};
  CHECK_THROWS_WITH_AS(validate_entries(2, range), doctest::Contains("5"), std::invalid_argument);
  const std::vector<int> zero = {0, 2, 3, 4};
  CHECK_THROWS_AS(validate_entries(2, zero), std::invalid_argument);
  const std::vector<int> wrong_size = {1, 2, 3};
  CHECK_THROWS_AS(validate_entries(2, wrong_size), std::invalid_argument);
}

TEST_CASE("arrangement accessors") {
  const TriangleArrangement t(4, kP16);
  CHECK(t.levels() == 4);
  CHECK(t.cell_count() == 16);
  CHECK(t.value_at(1) == 2);
  CHECK(t.value_at(10) == 3);
  CHECK(t.value_at(16) == 1);
  CHECK_THROWS_AS(TriangleArrangement(4, kI9), std::invalid_argument);
  CHECK(t == TriangleArrangement::unchecked(4, kP16));
  CHECK(TriangleArrangement(3, kI9) < TriangleArrangement(3, {1, 2, 3, 4, 5, 6, 7, 9, 8}));
}

TEST_CASE("paired sums of the worked 4-level triangle") {
  const PairedSums s = paired_sums(TriangleArrangement(4, kP16));
  CHECK(s.levels == 4);
  CHECK(s.magic == 68);
  CHECK(s.row_sums == std::vector<std::int64_t>{67, 47, 21, 1});
  CHECK(s.pos_diag_sums == std::vector<std::int64_t>{56, 28, 40, 12});
  CHECK(s.neg_diag_sums == std::vector<std::int64_t>{66, 35, 33, 2});
  CHECK(s.h == std::vector<std::int64_t>{68, 68});
  CHECK(s.p == std::vector<std::int64_t>{68, 68});
  CHECK(s.q == std::vector<std::int64_t>{68, 68});
  CHECK(is_magic(TriangleArrangement(4, kP16)));
}

TEST_CASE("paired sums of the identity 3-level triangle") {
  const PairedSums s = paired_sums(TriangleArrangement(3, kI9));
  CHECK(s.magic == 30);
  CHECK(s.row_sums == std::vector<std::int64_t>{15, 21, 9});
  CHECK(s.h == std::vector<std::int64_t>{24, 42});
  CHECK(s.p == std::vector<std::int64_t>{30, 30});
  CHECK(s.q == std::vector<std::int64_t>{34, 22});
  CHECK_FALSE(is_magic(TriangleArrangement(3, kI9)));
}

TEST_CASE("the middle line of an odd size counts twice") {
  // Rows sum to 15, 21, 9; the pairs are 15+9 and 2*21.
  const PairedSums s = paired_sums(TriangleArrangement(3, kI9));
  CHECK(s.h[0] == s.row_sums[0] + s.row_sums[2]);
  CHECK(s.h[1] == 2 * s.row_sums[1]);
}

TEST_CASE("single cell triangle is magic") {
  const TriangleArrangement t(1, {1});
  CHECK(is_magic(t));
  const PairedSums s = paired_sums(t);
  CHECK(s.magic == 2);
  CHECK(s.h == std::vector<std::int64_t>{2});
}

TEST_CASE("every 2-level arrangement is magic") {
  std::vector<int> entries = {1, 2, 3, 4};
  do {
    CHECK(is_magic(2, entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

TEST_CASE("is_magic agrees with recomputed paired sums on random arrangements") {
  Rng rng(20240817);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const auto perm = rng.random_permutation(n * n);
    const TriangleArrangement t = TriangleArrangement::unchecked(n, perm);
    const PairedSums s = paired_sums(t);
    bool all_equal = true;
    for (const auto* fam : {&s.h, &s.p, &s.q}) {
      for (auto v : *fam) all_equal = all_equal && v == s.magic;
    }
    CHECK(is_magic(t) == all_equal);
  }
}

TEST_CASE("invalid geometry arguments throw") {
  CHECK_THROWS_AS(magic_constant(0), std::invalid_argument);
  CHECK_THROWS_AS(coord_of_index(3, 0), std::out_of_range);
  CHECK_THROWS_AS(coord_of_index(3, 10), std::out_of_range);
  CHECK_THROWS_AS(index_of_coord(3, {4, 1}), std::out_of_range);
  CHECK_THROWS_AS(index_of_coord(3, {1, 6}), std::out_of_range);
  CHECK_THROWS_AS(cells_of_line(3, LineFamily::row, 0), std::out_of_range);
  CHECK_THROWS_AS(cells_of_line(3, LineFamily::row, 4), std::out_of_range);
}
