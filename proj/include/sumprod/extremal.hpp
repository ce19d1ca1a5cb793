#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sumprod/fp.hpp"

namespace sumprod {

// Explicit sets are refused above this to keep memory predictable; the
// implicit membership form works for any supported p.
inline constexpr std::uint64_t kExplicitCeiling = std::uint64_t{1} << 26;

// The independent set of size (p-1)/2 avoiding 1 in both sumset and
// productset: 0 from the pair {0,1}, 2 from the triple {2,1/2,-1}, the
// lesser root of X^2 - X + 1 when it exists, and from each six-cycle the
// three alternating vertices {r, 1/(1-r), 1-1/r} at its least member r.
struct ExtremalSet {
  PrimeModulus modulus;
  bool explicit_form;
  std::vector<Element> elements;  // sorted ascending; empty in implicit form
  std::uint64_t declared_size;    // (p-1)/2 for constructed and implicit sets

  bool contains(Element y) const;
};

// Builds the explicit sorted element list. Throws feasibility_error above
// kExplicitCeiling, directing callers to the member form.
ExtremalSet construct(const PrimeModulus& m);

// The same set with a membership predicate only; O(1) memory.
ExtremalSet implicit_set(const PrimeModulus& m);

// Decides y's membership in O(log p) without materializing anything.
bool member(Element y, const PrimeModulus& m);

// (p-1)/2, computed as 1 + 1 + delta/2 + 3*(p-5-delta)/6 and checked
// against (p-1)/2; a mismatch is a logic fault and throws.
std::uint64_t cardinality_formula(const PrimeModulus& m);

// Text form: "p=<p> size=<n> target=1" then one element per line, ascending.
std::string to_text(const ExtremalSet& s);

// Parses the text form back. Elements are deduplicated and sorted; the
// header size is informational only, so verification judges the actual
// list. Throws std::invalid_argument on malformed input.
ExtremalSet parse_text(std::istream& in);

}  // namespace sumprod
