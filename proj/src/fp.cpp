#include "sumprod/fp.hpp"

#include <initializer_list>

namespace sumprod {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One strong-probable-prime test of n to base a, with n - 1 = d * 2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::initializer_list<u64> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : kWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Miller-Rabin with the first twelve primes as bases is deterministic for
  // the entire 64-bit range.
  for (u64 a : kWitnesses) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

u64 next_prime_at_least(u64 n) {
  if (n <= 2) return 2;
  for (u64 c = n | 1; c < kMaxModulus; c += 2) {
    if (is_prime(c)) return c;
  }
  throw std::overflow_error("prime search left the supported range (< 2^62)");
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p >= kMaxModulus) {
    throw feasibility_error("p exceeds the 2^62 modulus ceiling");
  }
  if (!is_prime(p)) {
    throw std::domain_error(std::to_string(p) + " is not prime");
  }
  if (p < 5) {
    throw std::domain_error("p must be >= 5");
  }
  half_ = (p + 1) / 2;
  mod3_ = static_cast<unsigned>(p % 3);
}

Element PrimeModulus::pow(Element base, u64 exp) const { return powmod(base, exp, p_); }

Element PrimeModulus::inv(Element a) const {
  if (a == 0) throw std::domain_error("0 has no inverse");
  return powmod(a, p_ - 2, p_);
}

std::optional<std::pair<Element, Element>> sqrt_mod(Element a, const PrimeModulus& m) {
  const u64 p = m.p();
  a %= p;
  if (a == 0) return std::pair<Element, Element>{0, 0};
  if (m.pow(a, (p - 1) / 2) != 1) return std::nullopt;  // Euler criterion

  u64 r;
  if (p % 4 == 3) {
    r = m.pow(a, (p + 1) / 4);
  } else {
    // Tonelli-Shanks with p - 1 = q * 2^s.
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (m.pow(z, (p - 1) / 2) != p - 1) ++z;
    u64 mexp = s;
    u64 c = m.pow(z, q);
    u64 t = m.pow(a, q);
    r = m.pow(a, (q + 1) / 2);
    while (t != 1) {
      u64 i = 0;
      for (u64 t2 = t; t2 != 1; t2 = m.mul(t2, t2)) ++i;
      u64 b = c;
      for (u64 j = 0; j + i + 1 < mexp; ++j) b = m.mul(b, b);
      mexp = i;
      c = m.mul(b, b);
      t = m.mul(t, c);
      r = m.mul(r, b);
    }
  }
  const u64 other = p - r;
  return std::pair<Element, Element>{std::min(r, other), std::max(r, other)};
}

std::optional<std::pair<Element, Element>> roots_of_unit_trinomial(const PrimeModulus& m) {
  // Roots are (1 +- sqrt(-3)) / 2; the discriminant of X^2 - X + 1 is -3.
  const auto s = sqrt_mod(m.p() - 3, m);
  if (!s) return std::nullopt;
  const Element u = m.mul(m.add(1, s->first), m.half());
  const Element v = m.mul(m.sub(1, s->first), m.half());
  return std::pair<Element, Element>{std::min(u, v), std::max(u, v)};
}

}  // namespace sumprod
