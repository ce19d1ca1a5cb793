#pragma once

// Slow, independent reimplementations used as test oracles. Nothing here
// calls into the code paths under test: primality is trial division, roots
// and square roots are found by scanning, and the extremal problem is
// solved by raw power-set enumeration.

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/rng.hpp"

namespace testoracle {

inline bool is_prime_slow(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime_slow(n)) out.push_back(n);
  }
  return out;
}

inline std::vector<std::uint64_t> scan_sqrt(std::uint64_t a, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (r * r % p == a % p) out.push_back(r);
  }
  return out;
}

inline std::vector<std::uint64_t> scan_unit_trinomial_roots(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < p; ++y) {
    if ((y * y % p + p + 1 - y) % p == 0) out.push_back(y);
  }
  return out;
}

// Exact solution of the avoidance problem by enumerating all 2^p subsets:
// the maximum size of A with target absent from both A+A and AA, the count
// of maximum sets, and the lexicographically least one.
struct PowerSetOptimum {
  std::uint64_t max_size = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> least;
};

inline PowerSetOptimum power_set_optimum(std::uint64_t p, std::uint64_t target) {
  PowerSetOptimum best;
  best.count = 1;  // the empty set
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    std::vector<std::uint64_t> a;
    for (std::uint64_t v = 0; v < p; ++v) {
      if (mask & (std::uint64_t{1} << v)) a.push_back(v);
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i) {
      for (std::size_t j = i; ok && j < a.size(); ++j) {
        if ((a[i] + a[j]) % p == target || a[i] * a[j] % p == target) ok = false;
      }
    }
    if (!ok) continue;
    if (a.size() > best.max_size) {
      best.max_size = a.size();
      best.count = 1;
      best.least = a;
    } else if (a.size() == best.max_size && !a.empty()) {
      ++best.count;
      if (a < best.least) best.least = a;
    }
  }
  return best;
}

// `size` distinct residues below p, via a partial Fisher-Yates shuffle.
inline std::vector<std::uint64_t> random_distinct(std::uint64_t p, std::size_t size,
                                                  sumprod::SplitMix64& rng) {
  std::vector<std::uint64_t> pool(p);
  for (std::uint64_t v = 0; v < p; ++v) pool[v] = v;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(p - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return pool;
}

}  // namespace testoracle
