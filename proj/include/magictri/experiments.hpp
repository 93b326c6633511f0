#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "magictri/annealing.hpp"

namespace magictri {

// Batch experiments over the annealing solver and random sampling. Per-trial
// seeds are derived from a master seed with trial_seed(master, index), so
// results are independent of how trials are partitioned across threads.

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  bool success = false;
};

struct StepStats {
  int levels = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t unverified = 0;  // successes whose triangle failed the magic check; always 0
  std::vector<TrialRecord> per_trial;
  // Over successful trials only; NaN when there are none.
  double mean = 0.0;
  double median = 0.0;
  double q10 = 0.0, q25 = 0.0, q75 = 0.0, q90 = 0.0;
};

/// Runs trials independent annealing runs of the given config (its seed is
/// ignored; trial i uses trial_seed(master_seed, i)) and aggregates step
/// counts. Every reported success is re-verified with is_magic. trial_done,
/// if set, is called after each finished trial, possibly from worker threads.
StepStats run_sa_batch(int levels, std::uint64_t trials, const AnnealConfig& config,
                       std::uint64_t master_seed, int threads = 1,
                       const std::function<void()>& trial_done = {});

struct FrequencyEstimate {
  int levels = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;  // hits / trials
  double sigma = 0.0;     // binomial standard error of the estimate
  double lower3 = 0.0;    // estimate - 3 sigma, clamped to [0, 1]
  double upper3 = 0.0;    // estimate + 3 sigma, clamped to [0, 1]
};

/// Estimates the probability that a uniformly random arrangement is magic
/// by sampling seeded random permutations. trial_done, if set, is called
/// after each finished trial, possibly from worker threads.
FrequencyEstimate random_frequency(int levels, std::uint64_t trials, std::uint64_t seed,
                                   int threads = 1, const std::function<void()>& trial_done = {});

/// Upper bound on the count of magic triangles up to symmetry implied by a
/// frequency bound: (n^2)! / 6 * frequency_bound. levels >= 2.
double bound_estimate(int levels, double frequency_bound);

}  // namespace magictri
