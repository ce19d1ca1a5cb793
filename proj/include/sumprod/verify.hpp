#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumprod/fp.hpp"

namespace sumprod {

// Dense residue indicator over [0, p). Sumsets and productsets of explicit
// sets live here; the cap keeps the mask allocation bounded.
inline constexpr std::uint64_t kDenseSetCeiling = std::uint64_t{1} << 27;

class ResidueSet {
 public:
  explicit ResidueSet(std::uint64_t p) : mask_(p, false) {}

  void insert(Element v) {
    if (!mask_[v]) {
      mask_[v] = true;
      ++count_;
    }
  }
  bool contains(Element v) const { return mask_[v]; }
  std::uint64_t universe() const { return mask_.size(); }
  std::uint64_t size() const { return count_; }
  std::vector<Element> elements() const;
  std::optional<Element> least_absent() const;

 private:
  std::vector<bool> mask_;
  std::uint64_t count_ = 0;
};

// Full sumset {a + a'} over all pairs, diagonal included.
ResidueSet sumset(std::span<const Element> a, const PrimeModulus& m);

// Full productset {a * a'} over all pairs, squares included.
ResidueSet productset(std::span<const Element> a, const PrimeModulus& m);

enum class Method { ExhaustivePairs, NeighborExclusion, SampledNeighborExclusion };

const char* method_name(Method m);

enum class WitnessKind { Sum, Product };

// A violating pair: a + b = target or a * b = target with both in the set
// (a loop shows up as a diagonal pair a = b).
struct Witness {
  WitnessKind kind;
  Element a;
  Element b;
};

struct VerificationReport {
  std::uint64_t p;
  std::uint64_t set_size;
  bool sum_avoids_target;
  bool product_avoids_target;
  bool size_matches_formula;  // set size equals (p-1)/2
  Method method;
  std::uint64_t samples = 0;  // SampledNeighborExclusion only
  std::vector<Witness> witnesses;

  bool passed() const {
    return sum_avoids_target && product_avoids_target && size_matches_formula;
  }
};

// Checks target not-in A+A and target not-in AA. Enumerates all pairs when
// the set is small enough; otherwise uses neighbor exclusion (for each x,
// target - x and target * x^-1 must be absent), which is exact too.
// Failure witnesses are the lexicographically least violating pairs.
VerificationReport check_avoidance(std::span<const Element> a, Element target,
                                   const PrimeModulus& m);
VerificationReport check_avoidance(std::span<const Element> a, Element target,
                                   const PrimeModulus& m, Method method);

inline constexpr std::uint64_t kPairEnumerationCutoff = std::uint64_t{1} << 16;

struct CoverResult {
  bool covers;
  std::optional<Element> least_missing;
};

// Whether A+A = F_p. Any set with |A| > p/2 must cover.
CoverResult check_sumset_covers(std::span<const Element> a, const PrimeModulus& m);

// Sampled check of the implicit construction at sizes where enumeration is
// impossible. Draws `samples` residues from SplitMix64(seed); each sampled
// member y must have 1 - y and y^-1 outside the set. Also pins the five
// fixed memberships: 0 and 2 in, 1, -1 and 1/2 out.
VerificationReport verify_implicit(const PrimeModulus& m, std::uint64_t samples,
                                   std::uint64_t seed);

}  // namespace sumprod
