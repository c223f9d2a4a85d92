#pragma once

// Seeded generator for every randomized sweep: std::mt19937_64 (its output
// sequence is fixed by the standard) with a hand-rolled uniform mapping,
// because std::uniform_real_distribution differs between standard libraries.

#include <cstdint>
#include <random>

namespace lozimax {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, n); modulo bias is irrelevant at these sizes.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lozimax
