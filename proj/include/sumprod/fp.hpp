#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sumprod {

// A residue in [0, p). Every function taking an Element together with a
// PrimeModulus expects it already reduced.
using Element = std::uint64_t;

// Hard ceiling on the modulus. All products of two residues then fit in a
// 128-bit intermediate with room to spare, so arithmetic stays exact.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Thrown when an input is valid but exceeds a resource cap (explicit-set
// ceiling, enumeration caps, component caps). The CLI maps this to its own
// exit code, distinct from plain domain errors.
class feasibility_error : public std::runtime_error {
 public:
  explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic and exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Least prime >= n. Throws std::overflow_error if the search would leave
// the supported modulus range.
std::uint64_t next_prime_at_least(std::uint64_t n);

// A certified odd prime p >= 5 together with the residues the construction
// keeps needing: 1/2 = (p+1)/2, -1 = p-1, 2, and p mod 3.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  // The residue 1/2, not the count (p-1)/2.
  Element half() const { return half_; }
  Element minus_one() const { return p_ - 1; }
  Element two() const { return 2; }
  unsigned residue_class_mod_3() const { return mod3_; }

  Element reduce(std::uint64_t x) const { return x % p_; }
  Element add(Element a, Element b) const {
    const std::uint64_t s = a + b;  // no overflow: a, b < 2^62
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element pow(Element base, std::uint64_t exp) const;

  // Multiplicative inverse via Fermat. Throws std::domain_error on a == 0.
  Element inv(Element a) const;

 private:
  std::uint64_t p_;
  Element half_;
  unsigned mod3_;
};

// Square roots of a modulo p. Returns {0, 0} for a = 0, the pair {r, p-r}
// with r < p-r when a is a nonzero quadratic residue, and nothing otherwise.
std::optional<std::pair<Element, Element>> sqrt_mod(Element a, const PrimeModulus& m);

// The two roots of X^2 - X + 1 in F_p, ordered u < v, or nothing when the
// polynomial has no root. When present the roots satisfy u*v = u+v = 1.
std::optional<std::pair<Element, Element>> roots_of_unit_trinomial(const PrimeModulus& m);

}  // namespace sumprod
