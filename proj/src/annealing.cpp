#include "magictri/annealing.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace magictri {

namespace {

void check_config(const AnnealConfig& c) {
  if (c.levels < 1) {
    throw std::invalid_argument("levels must be positive, got " + std::to_string(c.levels));
  }
  if (!(c.initial_temperature > 0.0)) {
    throw std::invalid_argument("initial_temperature must be positive");
  }
  if (!(c.cooling_factor > 0.0 && c.cooling_factor < 1.0)) {
    throw std::invalid_argument("cooling_factor must lie in (0, 1)");
  }
  if (c.max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
}

std::int64_t pair_sum(const std::vector<std::int64_t>& sums, int k, int n) {
  return sums[static_cast<std::size_t>(k)] + sums[static_cast<std::size_t>(n - 1 - k)];
}

}  // namespace

std::int64_t energy(int levels, std::span<const int> entries) {
  const auto& table = LineTable::get(levels);
  const std::int64_t target = magic_constant(levels);
  std::int64_t total = 0;
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
      total += std::llabs(s - target);
    }
  }
  return total;
}

std::int64_t energy(const TriangleArrangement& t) { return energy(t.levels(), t.entries()); }

double acceptance_probability(std::int64_t delta, double temperature) {
  if (delta <= 0) return 1.0;
  if (!(temperature > 0.0)) return 0.0;
  return std::exp(-static_cast<double>(delta) / temperature);
}

AnnealState::AnnealState(const AnnealConfig& config)
    : config_(config), rng_((check_config(config), config.seed)) {
  entries_ = rng_.random_permutation(config_.levels * config_.levels);
  temperature_ = config_.initial_temperature;
  init_sums();
}

AnnealState::AnnealState(const AnnealConfig& config, std::vector<int> entries)
    : config_(config), rng_((check_config(config), config.seed)), entries_(std::move(entries)) {
  validate_entries(config_.levels, entries_);
  temperature_ = config_.initial_temperature;
  init_sums();
}

void AnnealState::init_sums() {
  const auto& table = LineTable::get(config_.levels);
  const int n = config_.levels;
  for (int f = 0; f < 3; ++f) {
    auto& sums = sums_[static_cast<std::size_t>(f)];
    sums.assign(static_cast<std::size_t>(n), 0);
    for (int line = 0; line < n; ++line) {
      std::int64_t s = 0;
      for (int cell : table.line_cells(static_cast<LineFamily>(f), line)) {
        s += entries_[static_cast<std::size_t>(cell)];
      }
      sums[static_cast<std::size_t>(line)] = s;
    }
  }
  energy_ = energy(config_.levels, entries_);
}

bool AnnealState::step() {
  const auto& table = LineTable::get(config_.levels);
  const int n = config_.levels;
  const int cells = n * n;
  const std::int64_t target = magic_constant(n);
  if (cells < 2) {
    ++steps_;
    temperature_ *= config_.cooling_factor;
    return false;
  }

  const auto i = static_cast<int>(rng_.below(static_cast<std::uint32_t>(cells)));
  auto j = static_cast<int>(rng_.below(static_cast<std::uint32_t>(cells - 1)));
  if (j >= i) ++j;
  const std::int64_t vi = entries_[static_cast<std::size_t>(i)];
  const std::int64_t vj = entries_[static_cast<std::size_t>(j)];
  const std::int64_t d = vj - vi;  // cell i gains d, cell j loses d

  // The swap can change at most six line sums; a paired-sum term moves only
  // when the two cells sit in lines of different pairs. A line paired with
  // itself (the middle line for odd n) counts its sum twice.
  std::int64_t delta = 0;
  for (int f = 0; f < 3; ++f) {
    const auto& sums = sums_[static_cast<std::size_t>(f)];
    const int li = table.line_of(static_cast<LineFamily>(f), i);
    const int lj = table.line_of(static_cast<LineFamily>(f), j);
    if (li == lj) continue;
    const int ki = table.pair_of(li);
    const int kj = table.pair_of(lj);
    if (ki == kj) continue;
    const std::int64_t wi = table.self_paired(li) ? 2 : 1;
    const std::int64_t wj = table.self_paired(lj) ? 2 : 1;
    const std::int64_t pi = pair_sum(sums, ki, n);
    const std::int64_t pj = pair_sum(sums, kj, n);
    delta -= std::llabs(pi - target) + std::llabs(pj - target);
    delta += std::llabs(pi + wi * d - target) + std::llabs(pj - wj * d - target);
  }

  last_delta_ = delta;
  bool accept = delta <= 0;
  if (!accept) {
    accept = rng_.unit() < acceptance_probability(delta, temperature_);
  }
  if (accept) {
    for (int f = 0; f < 3; ++f) {
      auto& sums = sums_[static_cast<std::size_t>(f)];
      const int li = table.line_of(static_cast<LineFamily>(f), i);
      const int lj = table.line_of(static_cast<LineFamily>(f), j);
      if (li == lj) continue;
      sums[static_cast<std::size_t>(li)] += d;
      sums[static_cast<std::size_t>(lj)] -= d;
    }
    entries_[static_cast<std::size_t>(i)] = static_cast<int>(vj);
    entries_[static_cast<std::size_t>(j)] = static_cast<int>(vi);
    energy_ += delta;
  }
  last_accepted_ = accept;
  ++steps_;
  temperature_ *= config_.cooling_factor;
  return accept;
}

AnnealOutcome solve(const AnnealConfig& config) {
  AnnealState state(config);
  while (state.current_energy() != 0 && state.steps_done() < config.max_steps) {
    state.step();
  }
  AnnealOutcome out;
  out.steps = state.steps_done();
  out.final_energy = state.current_energy();
  out.success = state.current_energy() == 0;
  if (out.success) {
    out.triangle = TriangleArrangement::unchecked(
        config.levels, std::vector<int>(state.entries().begin(), state.entries().end()));
  }
  return out;
}

namespace {

struct DefaultEntry {
  int levels;
  double t0;
  double alpha;
  std::uint64_t max_steps;
};

// Tuned so that batches of seeded runs finish with high success rates and
// step medians near 71, 205, 3179, 5536, 33309, 174527 for 3..8 levels.
// Odd sizes are harder: their self-paired middle lines need exact sums, and
// once the temperature is spent those runs almost never recover, so the odd
// entries cool more slowly and cap the budget soon after the schedule
// freezes.
constexpr DefaultEntry kDefaults[] = {
    {2, 4.0, 0.90, 1000},
    {3, 9.0, 0.95, 10000},
    {4, 16.0, 0.99, 50000},
    {5, 25.0, 0.9997, 50000},
    {6, 36.0, 0.9997, 1000000},
    {7, 49.0, 0.99996, 1000000},
    {8, 64.0, 0.999980, 2000000},
    {9, 81.0, 0.9999908, 5000000},
    {10, 100.0, 0.999997, 10000000},
    {11, 121.0, 0.999998, 20000000},
    {12, 144.0, 0.999999, 40000000},
};

}  // namespace

const char* const kAnnealDefaultsVersion = "1";

AnnealConfig default_config(int levels) {
  if (levels < 2) {
    throw std::invalid_argument("tuned defaults start at 2 levels, got " + std::to_string(levels));
  }
  AnnealConfig c;
  c.levels = levels;
  c.seed = 0;
  for (const auto& e : kDefaults) {
    if (e.levels == levels) {
      c.initial_temperature = e.t0;
      c.cooling_factor = e.alpha;
      c.max_steps = e.max_steps;
      return c;
    }
  }
  // Beyond the table: temperature grows with the entry range, the cooling
  // horizon roughly quadruples per level.
  const auto& last = kDefaults[std::size(kDefaults) - 1];
  double horizon = 1.0 / (1.0 - last.alpha);
  std::uint64_t steps = last.max_steps;
  for (int l = last.levels; l < levels; ++l) {
    horizon *= 4.0;
    steps = steps > (1ULL << 62) ? steps : steps * 2;
  }
  c.initial_temperature = static_cast<double>(levels * levels);
  c.cooling_factor = 1.0 - 1.0 / horizon;
  c.max_steps = steps;
  return c;
}

}  // namespace magictri
