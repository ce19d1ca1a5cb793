#include "sumprod/refute.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumprod/extremal.hpp"

namespace sumprod {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

RefutationWitness refute(Rational c, std::uint64_t p0, std::uint64_t samples,
                         std::uint64_t seed) {
  if (c.den == 0) throw std::domain_error("c has denominator 0");
  if (c.num == 0) throw std::domain_error("c must be positive");
  // c <= 1/2 as 2 * num <= den, in 128 bits so 2 * num cannot wrap.
  if (u128{2} * c.num > c.den) throw std::domain_error("c must be at most 1/2");

  // p must strictly exceed p0, 5, and 1/(2c) = den/(2 num). The least
  // integer strictly above den/(2 num) is floor(den / (2 num)) + 1 whether
  // or not the quotient is exact, and the floor fits u64 since num >= 1.
  std::uint64_t inv_floor =
      static_cast<std::uint64_t>(c.den / (u128{2} * c.num));
  std::uint64_t start = std::max({p0, std::uint64_t{5}, inv_floor});
  if (start == UINT64_MAX) throw std::overflow_error("prime search start overflows");
  std::uint64_t p = next_prime_at_least(start + 1);

  PrimeModulus m(p);
  RefutationWitness w{};
  w.c = c;
  w.p0 = p0;
  w.p = p;
  w.set_size = (p - 1) / 2;

  // threshold = (1/2 - c) * p = (den - 2 num) * p / (2 den), reduced.
  u128 t_num = (u128{c.den} - u128{2} * c.num) * p;
  u128 t_den = u128{2} * c.den;
  u128 g = gcd128(t_num == 0 ? t_den : t_num, t_den);
  w.threshold_num = t_num / g;
  w.threshold_den = t_den / g;

  // The three invariants, exactly. All hold by the choice of p; a failure
  // here is a bug, not an input problem.
  bool p_above_p0 = p > p0 && p >= 5;
  bool p_above_half_inv = u128{2} * c.num * p > c.den;  // p > 1/(2c)
  // (p-1)/2 > (den - 2 num) p / (2 den), cross-multiplied by 2 den > 0.
  bool size_beats_threshold =
      u128{c.den} * (p - 1) > (u128{c.den} - u128{2} * c.num) * p;
  if (!p_above_p0 || !p_above_half_inv || !size_beats_threshold) {
    throw std::logic_error("refutation invariant failed for p = " +
                           std::to_string(p));
  }

  if (p <= kExplicitCeiling) {
    ExtremalSet a = construct(m);
    w.verification = check_avoidance(a.elements, 1, m);
  } else {
    w.verification = verify_implicit(m, samples, seed);
  }
  return w;
}

}  // namespace sumprod
