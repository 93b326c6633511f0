#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "magictri/rng.hpp"
#include "magictri/triangle.hpp"

namespace magictri {

// Simulated annealing search for magic triangles of any size. The energy of
// an arrangement is the total absolute deviation of the paired sums from the
// magic constant; zero energy is exactly the magic property. Moves swap two
// entries; a move's energy change touches at most the six lines through the
// two cells and is evaluated incrementally.

struct AnnealConfig {
  int levels = 0;
  double initial_temperature = 0.0;
  double cooling_factor = 0.0;  // temperature is multiplied by this each step
  std::uint64_t max_steps = 0;  // proposal budget, accepted and rejected alike
  std::uint64_t seed = 0;
};

struct AnnealOutcome {
  bool success = false;
  std::optional<TriangleArrangement> triangle;  // present iff success
  std::uint64_t steps = 0;                      // proposals spent
  std::int64_t final_energy = 0;
};

std::int64_t energy(const TriangleArrangement& t);
std::int64_t energy(int levels, std::span<const int> entries);

/// Metropolis acceptance probability for an energy increase at the given
/// temperature: exp(-delta / temperature); 1 when delta <= 0.
double acceptance_probability(std::int64_t delta, double temperature);

// One annealing run over its own arrangement, line sums and rng. step()
// makes one proposal: pick two distinct cells, evaluate the energy change,
// accept when it is <= 0 and otherwise with the Metropolis probability at
// the current temperature, then cool. Identical configs replay identical
// trajectories.
class AnnealState {
 public:
  /// Starts from a uniformly random arrangement drawn from the seeded rng.
  explicit AnnealState(const AnnealConfig& config);
  /// Starts from the given entries (for tests and warm starts).
  AnnealState(const AnnealConfig& config, std::vector<int> entries);

  /// One proposal; returns whether it was accepted.
  bool step();

  int levels() const { return config_.levels; }
  std::int64_t current_energy() const { return energy_; }
  std::uint64_t steps_done() const { return steps_; }
  double temperature() const { return temperature_; }
  std::span<const int> entries() const { return entries_; }

  // Last proposal, for inspection in tests.
  std::int64_t last_delta() const { return last_delta_; }
  bool last_accepted() const { return last_accepted_; }

 private:
  void init_sums();

  AnnealConfig config_;
  Rng rng_;
  std::vector<int> entries_;                       // 0-based cells
  std::array<std::vector<std::int64_t>, 3> sums_;  // line sums per family
  std::int64_t energy_ = 0;
  double temperature_ = 0.0;
  std::uint64_t steps_ = 0;
  std::int64_t last_delta_ = 0;
  bool last_accepted_ = false;
};

/// Runs until the energy hits zero or the step budget is spent. A triangle
/// that is magic from the start succeeds after zero steps. Failures are
/// reported in the outcome, not thrown.
AnnealOutcome solve(const AnnealConfig& config);

/// Tuned defaults per level count (seed left at 0 for the caller to set);
/// levels >= 2. Entries beyond the tuned table extrapolate the cooling
/// schedule geometrically.
AnnealConfig default_config(int levels);

/// Version tag of the tuned default table, recorded in reports.
extern const char* const kAnnealDefaultsVersion;

}  // namespace magictri
