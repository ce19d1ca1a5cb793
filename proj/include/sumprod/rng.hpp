#pragma once

#include <cstdint>

namespace sumprod {

// SplitMix64. 64-bit state, one output per step. Sampled verification
// reports cite only the seed, so any run reproduces bit for bit.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Residue draw: next() reduced mod n.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace sumprod
