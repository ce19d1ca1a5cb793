#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sumprod/fp.hpp"

namespace sumprod {

// The graph on vertex set F_p whose edges encode the two forbidden
// relations: distinct u, v are adjacent when u + v = t or u * v = t, and a
// vertex u carries a loop when 2u = t or u^2 = t. A set avoids t in both
// its sumset and its productset exactly when it is independent here
// (no looped vertex, no adjacent pair). The construction uses t = 1.
struct RelationGraph {
  PrimeModulus modulus;
  Element target;
};

inline constexpr std::size_t kDefaultComponentCap = 64;

// The at-most-two distinct neighbors of y: t - y, and t * y^-1 when y != 0,
// excluding y itself (a self-pairing is a loop, not an edge). Sorted.
std::vector<Element> neighbors(Element y, const RelationGraph& g);

bool is_looped(Element y, const RelationGraph& g);

struct ComponentSet {
  std::vector<Element> vertices;                     // sorted
  std::vector<std::pair<Element, Element>> edges;    // (min, max), sorted
  std::vector<Element> looped;                       // sorted
};

// Breadth-first closure of y under the neighbor relation. Throws
// feasibility_error when the component grows past size_cap; at t = 1 no
// component has more than 6 vertices, but for other targets no bound holds.
ComponentSet component_of(Element y, const RelationGraph& g,
                          std::size_t size_cap = kDefaultComponentCap);

// True iff no member is looped and no two members are adjacent. Members
// must be residues below p.
bool independent(std::span<const Element> s, const RelationGraph& g);

}  // namespace sumprod
