#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sumprod/fp.hpp"

namespace sumprod {

// The group generated by the involutions s(y) = 1 - y and t(y) = 1/y is S3:
// s^2 = t^2 = (st)^3 = id, so every word reduces to one of these six.
// Words act by composition, rightmost letter first: ST sends y to s(t(y)).
enum class Word : int { Id = 0, S, T, ST, TS, STS };

inline constexpr std::array<Word, 6> kAllWords = {Word::Id, Word::S,  Word::T,
                                                  Word::ST, Word::TS, Word::STS};

const char* word_name(Word w);

// Reduced word of w1 composed after w2 (w2 applied first).
Word compose(Word w1, Word w2);

// The Moebius image of y: Id -> y, S -> 1-y, T -> 1/y, ST -> 1-1/y,
// TS -> 1/(1-y), STS -> y/(y-1). Throws std::domain_error at a pole
// (y = 0 for T and ST, y = 1 for TS and STS).
Element apply_word(Word w, Element y, const PrimeModulus& m);

// Every word fixing y, Id included. Uses the closed-form fixed-point
// conditions (S: y = 1/2; T: y = +-1; ST, TS: y^2 - y + 1 = 0;
// STS: y in {0, 2}), so it is defined even at the poles.
std::vector<Word> fixed_words(Element y, const PrimeModulus& m);

// The six-element orbit of a generic x, in the order the component cycle
// traverses it: x, 1-x, 1/(1-x), x/(x-1), 1-1/x, 1/x. Consecutive members
// alternate sum-adjacency and product-adjacency, starting with a sum edge.
struct Orbit {
  Element base;
  std::array<Element, 6> members;
};

// Requires x outside {0, 1, -1, 1/2, 2} with x^2 - x + 1 != 0; throws
// std::domain_error otherwise. The six members are then pairwise distinct.
Orbit orbit_of(Element x, const PrimeModulus& m);

enum class ComponentKind { ExceptionalPair, ExceptionalTriple, RootPair, SixCycle };

const char* component_kind_name(ComponentKind k);

// A connected component of the t = 1 relation graph: the pair {0, 1}, the
// triple {2, 1/2, -1}, the root pair of X^2 - X + 1 when it exists, or a
// six-cycle. The representative is the least member.
struct Component {
  ComponentKind kind;
  Element representative;
  std::vector<Element> members;  // sorted
  int delta_contribution;        // 2 for the root pair, 0 otherwise
};

Component classify(Element y, const PrimeModulus& m);

struct CensusRecord {
  std::uint64_t p;
  int delta;  // number of roots of X^2 - X + 1 in F_p, 0 or 2
  std::uint64_t pair_components;
  std::uint64_t triple_components;
  std::uint64_t root_pair_components;
  std::uint64_t six_cycle_components;
  std::vector<Element> six_cycle_reps;  // increasing
};

// Cap on census enumeration; matches the explicit-set ceiling so the two
// enumerating front ends refuse at the same point.
inline constexpr std::uint64_t kCensusCeiling = std::uint64_t{1} << 26;

// Walks all of F_p and tallies components by kind. O(p log p) time,
// memory only for the six-cycle representative list.
CensusRecord census(const PrimeModulus& m);

// Sum of the six-cycle representatives, wrapping mod 2^64.
std::uint64_t census_checksum(const CensusRecord& r);

// CSV row "p,delta,n_sixcycles,checksum".
std::string census_csv_row(const CensusRecord& r);

}  // namespace sumprod
