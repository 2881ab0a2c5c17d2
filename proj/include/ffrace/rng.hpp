#pragma once

#include <cstdint>

namespace ffrace {

// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
// needed so that runs are reproducible from a single seed across platforms;
// std::uniform_int_distribution is avoided for the same reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via rejection; n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - (~0ULL % n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Derive an independent stream; handy for per-worker generators.
  Rng split(std::uint64_t salt) {
    return Rng(next_u64() ^ (salt * 0xd1342543de82ef95ULL));
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ffrace
