#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace uqlat {

// Deterministic RNG for property tests; avoids std distributions so results
// are reproducible across standard libraries.
struct Rng {
  std::mt19937_64 g;

  explicit Rng(std::uint64_t seed) : g(seed) {}

  long range(long lo, long hi) {  // inclusive
    if (hi < lo) throw std::invalid_argument("Rng::range: empty interval");
    return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return (g() % 1000000) < static_cast<std::uint64_t>(p * 1000000); }
};

}  // namespace uqlat
