#pragma once

#include <cstdint>
#include <random>

namespace higauge {

/// Deterministic randomness. Every trial derives its stream from
/// (seed, suite index, trial index) so concurrent execution cannot change
/// results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t suite,
                       std::uint64_t trial) {
    // splitmix-style mixing of the three indices
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (suite + 1) +
                      0xbf58476d1ce4e5b9ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
  }

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace higauge
