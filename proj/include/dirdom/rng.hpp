#pragma once

#include <cstdint>

namespace dirdom {

using Seed = std::uint64_t;

// Deterministic 64-bit generator with a SplitMix64 update rule. The constants
// below are part of the output contract: equal seeds produce equal streams on
// every platform, so seeded experiments replay exactly.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(Seed seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr bool next_bool() { return next() >> 63; }

  // Uniform in [0, bound); bound >= 1. Rejection keeps it unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent child stream; advances this stream by one step.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace dirdom
