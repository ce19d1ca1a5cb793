#include "sumprod/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sumprod {

std::vector<Element> neighbors(Element y, const RelationGraph& g) {
  std::vector<Element> out;
  const Element s = g.modulus.sub(g.target, y);
  if (s != y) out.push_back(s);
  if (y != 0) {
    const Element q = g.modulus.mul(g.target, g.modulus.inv(y));
    if (q != y && q != s) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_looped(Element y, const RelationGraph& g) {
  return g.modulus.add(y, y) == g.target || g.modulus.mul(y, y) == g.target;
}

ComponentSet component_of(Element y, const RelationGraph& g, std::size_t size_cap) {
  if (size_cap < 1) throw std::domain_error("size_cap must be >= 1");
  if (y >= g.modulus.p()) throw std::domain_error("vertex out of range");

  std::set<Element> seen{y};
  std::vector<Element> frontier{y};
  std::set<std::pair<Element, Element>> edges;
  while (!frontier.empty()) {
    const Element v = frontier.back();
    frontier.pop_back();
    for (Element w : neighbors(v, g)) {
      edges.insert({std::min(v, w), std::max(v, w)});
      if (seen.insert(w).second) {
        if (seen.size() > size_cap) {
          throw feasibility_error("component of " + std::to_string(y) +
                                  " exceeds the size cap " + std::to_string(size_cap));
        }
        frontier.push_back(w);
      }
    }
  }

  ComponentSet out;
  out.vertices.assign(seen.begin(), seen.end());
  out.edges.assign(edges.begin(), edges.end());
  for (Element v : out.vertices) {
    if (is_looped(v, g)) out.looped.push_back(v);
  }
  return out;
}

bool independent(std::span<const Element> s, const RelationGraph& g) {
  std::vector<Element> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (Element a : sorted) {
    if (a >= g.modulus.p()) throw std::domain_error("set member out of range");
  }
  for (Element a : sorted) {
    if (is_looped(a, g)) return false;
    for (Element b : neighbors(a, g)) {
      if (std::binary_search(sorted.begin(), sorted.end(), b)) return false;
    }
  }
  return true;
}

}  // namespace sumprod
