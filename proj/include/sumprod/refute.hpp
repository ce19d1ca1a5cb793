#pragma once

#include <cstdint>

#include "sumprod/fp.hpp"
#include "sumprod/verify.hpp"

namespace sumprod {

// Exact nonnegative fraction. Never a float: every inequality in the
// refutation is checked by integer cross-multiplication.
struct Rational {
  std::uint64_t num;
  std::uint64_t den;
};

// A concrete counterexample to the claim "every large prime p admits only
// sets of size at most (1/2 - c)p avoiding 1 in A+A and AA": a prime
// p > p0 whose extremal set of size (p-1)/2 beats the threshold (1/2 - c)p.
struct RefutationWitness {
  Rational c;
  std::uint64_t p0;
  std::uint64_t p;
  unsigned __int128 threshold_num;  // (1/2 - c) * p, reduced
  unsigned __int128 threshold_den;
  std::uint64_t set_size;  // (p - 1) / 2
  VerificationReport verification;
};

// Picks p = next_prime_at_least(max(p0, 5, floor(1/(2c))) + 1), so p is
// strictly greater than all three bounds, builds the extremal set
// (explicit when p fits the ceiling, implicit with sampled checks beyond),
// and certifies set_size > threshold exactly. Requires 0 < c <= 1/2.
RefutationWitness refute(Rational c, std::uint64_t p0,
                         std::uint64_t samples = 10000, std::uint64_t seed = 1);

}  // namespace sumprod
