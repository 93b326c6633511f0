#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace magictri {

// Deterministic randomness helpers. std::mt19937_64's raw output sequence is
// pinned by the standard, and the derived draws below use only integer
// arithmetic plus a fixed 53-bit double conversion, so identical seeds give
// identical streams on every platform. Standard-library distributions are
// deliberately avoided (their sequences are implementation-defined).

/// Generator identity, recorded in report metadata.
inline constexpr const char* kRngName = "mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent per-trial seed derived from a master seed and a trial index.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint64_t b = bound;
    std::uint64_t x = next_u64();
    std::uint64_t r = x % b;
    // Reject the partial block at the top of the 2^64 range.
    while (x - r > std::uint64_t(0) - b) {
      x = next_u64();
      r = x % b;
    }
    return static_cast<std::uint32_t>(r);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Values 1..n in uniformly random order (Fisher-Yates).
  std::vector<int> random_permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      const auto j = below(static_cast<std::uint32_t>(i + 1));
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace magictri
