#include "magictri/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace magictri {

namespace {

int clamp_threads(int threads, std::uint64_t work) {
  if (threads < 1) threads = 1;
  if (static_cast<std::uint64_t>(threads) > work) threads = static_cast<int>(work);
  return threads;
}

// Splits [0, total) into contiguous chunks and runs body(first, last) on its
// own thread for each.
void partition_trials(std::uint64_t total, int threads,
                      const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (total == 0) return;
  threads = clamp_threads(threads, total);
  if (threads == 1) {
    body(0, total);
    return;
  }
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) /
                              static_cast<std::uint64_t>(threads);
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t b = static_cast<std::uint64_t>(t) * chunk;
    const std::uint64_t e = std::min(total, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& w : workers) w.join();
}

// Nearest-rank quantile over an ascending sequence.
double quantile(const std::vector<std::uint64_t>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto n = sorted.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  return static_cast<double>(sorted[rank - 1]);
}

double median_of(const std::vector<std::uint64_t>& sorted) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto n = sorted.size();
  if (n % 2 == 1) return static_cast<double>(sorted[n / 2]);
  return (static_cast<double>(sorted[n / 2 - 1]) + static_cast<double>(sorted[n / 2])) / 2.0;
}

}  // namespace

StepStats run_sa_batch(int levels, std::uint64_t trials, const AnnealConfig& config,
                       std::uint64_t master_seed, int threads,
                       const std::function<void()>& trial_done) {
  if (levels != config.levels) {
    throw std::invalid_argument("config is tuned for " + std::to_string(config.levels) +
                                " levels, batch asked for " + std::to_string(levels));
  }
  StepStats stats;
  stats.levels = levels;
  stats.trials = trials;
  stats.per_trial.resize(trials);

  std::vector<std::uint8_t> unverified(trials, 0);
  partition_trials(trials, threads, [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t i = first; i < last; ++i) {
      AnnealConfig c = config;
      c.seed = trial_seed(master_seed, i);
      const AnnealOutcome outcome = solve(c);
      bool ok = outcome.success;
      if (ok && !is_magic(*outcome.triangle)) {
        unverified[i] = 1;
        ok = false;
      }
      stats.per_trial[i] = TrialRecord{i, c.seed, outcome.steps, ok};
      if (trial_done) trial_done();
    }
  });

  std::vector<std::uint64_t> success_steps;
  success_steps.reserve(trials);
  for (const auto& r : stats.per_trial) {
    if (r.success) {
      ++stats.successes;
      success_steps.push_back(r.steps);
    } else {
      ++stats.failures;
    }
  }
  for (auto flag : unverified) stats.unverified += flag;

  std::sort(success_steps.begin(), success_steps.end());
  double sum = 0.0;
  for (auto s : success_steps) sum += static_cast<double>(s);
  stats.mean = success_steps.empty() ? std::numeric_limits<double>::quiet_NaN()
                                     : sum / static_cast<double>(success_steps.size());
  stats.median = median_of(success_steps);
  stats.q10 = quantile(success_steps, 0.10);
  stats.q25 = quantile(success_steps, 0.25);
  stats.q75 = quantile(success_steps, 0.75);
  stats.q90 = quantile(success_steps, 0.90);
  return stats;
}

FrequencyEstimate random_frequency(int levels, std::uint64_t trials, std::uint64_t seed,
                                   int threads, const std::function<void()>& trial_done) {
  if (levels < 1) {
    throw std::invalid_argument("levels must be positive, got " + std::to_string(levels));
  }
  LineTable::get(levels);  // build the shared table before the workers race for it

  const int cells = levels * levels;
  std::vector<std::uint64_t> hits_by_thread;
  std::uint64_t hits = 0;
  if (trials > 0) {
    const int nthreads = clamp_threads(threads, trials);
    hits_by_thread.assign(static_cast<std::size_t>(nthreads), 0);
    std::atomic<int> next_slot{0};
    partition_trials(trials, nthreads, [&](std::uint64_t first, std::uint64_t last) {
      const int slot = next_slot.fetch_add(1);
      std::uint64_t local = 0;
      for (std::uint64_t i = first; i < last; ++i) {
        Rng rng(trial_seed(seed, i));
        const auto perm = rng.random_permutation(cells);
        if (is_magic(levels, perm)) ++local;
        if (trial_done) trial_done();
      }
      hits_by_thread[static_cast<std::size_t>(slot)] = local;
    });
    for (auto h : hits_by_thread) hits += h;
  }

  FrequencyEstimate est;
  est.levels = levels;
  est.trials = trials;
  est.hits = hits;
  if (trials > 0) {
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    est.estimate = p;
    est.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    est.lower3 = std::max(0.0, p - 3.0 * est.sigma);
    est.upper3 = std::min(1.0, p + 3.0 * est.sigma);
  }
  return est;
}

double bound_estimate(int levels, double frequency_bound) {
  if (levels < 2) {
    throw std::invalid_argument("bound_estimate needs at least 2 levels, got " +
                                std::to_string(levels));
  }
  double factorial = 1.0;
  for (int i = 2; i <= levels * levels; ++i) factorial *= static_cast<double>(i);
  return factorial / 6.0 * frequency_bound;
}

}  // namespace magictri
