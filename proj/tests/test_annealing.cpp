#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "magictri/annealing.hpp"
#include "magictri/rng.hpp"
#include "magictri/triangle.hpp"

using namespace magictri;

namespace {

const std::vector<int> kP16 = {2, 15, 4, 7, 11, 16, 12, 14, 9, 3, 8, 13, 5, 10, 6, 1};

bool valid_permutation(std::span<const int> entries) {
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("energy is the total deviation of the paired sums") {
  CHECK(energy(TriangleArrangement(4, kP16)) == 0);

  // Rows of 1..9 in order sum to 15, 21, 9; the pairs are 15+9 and 2*21.
  // Against the target 30 that deviates by 6 and 12; the diagonal pairs
  // contribute the rest.
  const TriangleArrangement i9(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(energy(i9) == 30);

  const std::vector<int> i9_entries = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(energy(3, i9_entries) == 30);
  const std::vector<int> lone = {1};
  CHECK(energy(1, lone) == 0);
}

TEST_CASE("zero energy is exactly the magic property") {
  for (int n : {2, 3}) {
    const int cells = n * n;
    std::vector<int> perm(static_cast<std::size_t>(cells));
    std::iota(perm.begin(), perm.end(), 1);
    int checked = 0;
    do {
      const TriangleArrangement t(n, perm);
      CHECK(is_magic(t) == (energy(t) == 0));
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(checked == (n == 2 ? 24 : 362880));
  }

  Rng rng(77);
  for (int n = 4; n <= 8; ++n) {
    for (int round = 0; round < 50; ++round) {
      const auto perm = rng.random_permutation(n * n);
      const TriangleArrangement t = TriangleArrangement::unchecked(n, perm);
      CHECK(is_magic(t) == (energy(t) == 0));
    }
  }
}

TEST_CASE("acceptance probability") {
  CHECK(acceptance_probability(0, 1.0) == 1.0);
  CHECK(acceptance_probability(-5, 0.1) == 1.0);
  CHECK(acceptance_probability(2, 1.5) == doctest::Approx(std::exp(-2.0 / 1.5)));

  CHECK(acceptance_probability(3, 2.0) < acceptance_probability(2, 2.0));
  CHECK(acceptance_probability(2, 1.0) < acceptance_probability(2, 4.0));

  CHECK(acceptance_probability(1, 0.0) == 0.0);
  CHECK(acceptance_probability(1, -1.0) == 0.0);
}

TEST_CASE("incremental energy matches recomputation after every step") {
  // Odd sizes exercise the self-paired middle line, whose sum counts twice.
  for (int n : {3, 4, 5}) {
    AnnealConfig c;
    c.levels = n;
    c.initial_temperature = 50.0;
    c.cooling_factor = 0.9999;
    c.max_steps = 3000;
    c.seed = 1000 + static_cast<std::uint64_t>(n);
    AnnealState state(c);
    CHECK(state.current_energy() == energy(n, state.entries()));

    for (int i = 0; i < 3000; ++i) {
      const std::int64_t before = state.current_energy();
      const bool accepted = state.step();
      CHECK(accepted == state.last_accepted());
      if (accepted) {
        CHECK(state.current_energy() == before + state.last_delta());
      } else {
        CHECK(state.current_energy() == before);
      }
      CHECK(state.current_energy() == energy(n, state.entries()));
      CHECK(valid_permutation(state.entries()));
    }
    CHECK(state.steps_done() == 3000);
  }
}

TEST_CASE("a warm start keeps the given entries") {
  AnnealConfig c;
  c.levels = 4;
  c.initial_temperature = 10.0;
  c.cooling_factor = 0.99;
  c.max_steps = 100;
  c.seed = 5;
  AnnealState state(c, kP16);
  CHECK(state.current_energy() == 0);
  CHECK(std::equal(kP16.begin(), kP16.end(), state.entries().begin()));
}

TEST_CASE("temperature follows the geometric schedule") {
  AnnealConfig c;
  c.levels = 3;
  c.initial_temperature = 8.0;
  c.cooling_factor = 0.95;
  c.max_steps = 1000;
  c.seed = 9;
  AnnealState state(c);
  CHECK(state.temperature() == doctest::Approx(8.0));
  for (int i = 0; i < 40; ++i) state.step();
  CHECK(state.temperature() == doctest::Approx(8.0 * std::pow(0.95, 40)));
}

TEST_CASE("identical configs replay identical trajectories") {
  AnnealConfig c;
  c.levels = 5;
  c.initial_temperature = 25.0;
  c.cooling_factor = 0.999;
  c.max_steps = 2000;
  c.seed = 4242;

  AnnealState a(c);
  AnnealState b(c);
  CHECK(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin()));
  for (int i = 0; i < 2000; ++i) {
    const bool ra = a.step();
    const bool rb = b.step();
    CHECK(ra == rb);
    CHECK(a.last_delta() == b.last_delta());
  }
  CHECK(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin()));
  CHECK(a.current_energy() == b.current_energy());

  const AnnealOutcome o1 = solve(c);
  const AnnealOutcome o2 = solve(c);
  CHECK(o1.success == o2.success);
  CHECK(o1.steps == o2.steps);
  CHECK(o1.final_energy == o2.final_energy);
  CHECK(o1.triangle.has_value() == o2.triangle.has_value());
  if (o1.triangle && o2.triangle) CHECK(*o1.triangle == *o2.triangle);
}

TEST_CASE("every 2-level start is already magic") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    AnnealConfig c = default_config(2);
    c.seed = seed;
    const AnnealOutcome out = solve(c);
    CHECK(out.success);
    CHECK(out.steps == 0);
    REQUIRE(out.triangle.has_value());
    CHECK(is_magic(*out.triangle));
  }
}

TEST_CASE("annealing finds magic triangles at the tuned defaults") {
  for (int n : {3, 4, 5}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      AnnealConfig c = default_config(n);
      c.seed = seed;
      const AnnealOutcome out = solve(c);
      CHECK(out.success);
      CHECK(out.final_energy == 0);
      CHECK(out.steps <= c.max_steps);
      REQUIRE(out.triangle.has_value());
      CHECK(out.triangle->levels() == n);
      CHECK(is_magic(*out.triangle));
    }
  }
}

TEST_CASE("an exhausted budget reports failure") {
  AnnealConfig c;
  c.levels = 5;
  c.initial_temperature = 10.0;
  c.cooling_factor = 0.9;
  c.max_steps = 10;
  c.seed = 31337;
  const AnnealOutcome out = solve(c);
  CHECK_FALSE(out.success);
  CHECK_FALSE(out.triangle.has_value());
  CHECK(out.steps == 10);
  CHECK(out.final_energy > 0);
}

TEST_CASE("configs are validated") {
  AnnealConfig c;
  c.levels = 3;
  c.initial_temperature = 9.0;
  c.cooling_factor = 0.95;
  c.max_steps = 100;
  c.seed = 1;

  AnnealConfig bad = c;
  bad.levels = 0;
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
  bad = c;
  bad.initial_temperature = 0.0;
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
  bad = c;
  bad.cooling_factor = 1.0;
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
  bad = c;
  bad.cooling_factor = 0.0;
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
  bad = c;
  bad.max_steps = 0;
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
}

TEST_CASE("tuned defaults cover every size from two up") {
  CHECK_THROWS_AS(default_config(1), std::invalid_argument);
  for (int n = 2; n <= 12; ++n) {
    const AnnealConfig c = default_config(n);
    CHECK(c.levels == n);
    CHECK(c.initial_temperature > 0.0);
    CHECK(c.cooling_factor > 0.0);
    CHECK(c.cooling_factor < 1.0);
    CHECK(c.max_steps >= 1);
    CHECK(c.seed == 0);
  }
  // Budgets do not shrink as the search space grows.
  for (int n = 3; n <= 12; ++n) {
    CHECK(default_config(n).max_steps >= default_config(n - 1).max_steps);
    CHECK(default_config(n).cooling_factor >= default_config(n - 1).cooling_factor);
  }
  CHECK(std::string(kAnnealDefaultsVersion) != "");
}
