#include "sumprod/oracle.hpp"

#include <algorithm>
#include <string>

namespace sumprod {

const char* oracle_method_name(OracleMethod m) {
  switch (m) {
    case OracleMethod::SubsetEnumeration: return "SubsetEnumeration";
    case OracleMethod::ComponentwiseMIS: return "ComponentwiseMIS";
  }
  return "?";
}

namespace {

// Maximum independent set over at most 64 candidate vertices with bitmask
// adjacency. Candidates arrive in increasing element order and the search
// includes before it excludes, so the first set found at any size is the
// lexicographically least of that size; the recorded maximum inherits the
// property. Counting mode weakens the prune to keep ties alive, so every
// subset matching the final maximum reaches its leaf exactly once.
struct MaskSearch {
  const std::vector<std::uint64_t>& adj;
  bool with_count;
  std::uint64_t best = 0;
  std::uint64_t best_mask = 0;  // empty set: correct when no candidate exists
  std::uint64_t count = 1;

  void run(std::size_t idx, std::uint64_t chosen_mask, std::uint64_t chosen) {
    const std::uint64_t n = adj.size();
    const std::uint64_t potential = chosen + (n - idx);
    if (with_count ? potential < best : potential <= best && best > 0) return;
    if (idx == n) {
      if (chosen > best) {
        best = chosen;
        best_mask = chosen_mask;
        count = 1;
      } else if (chosen == best && chosen_mask != best_mask) {
        ++count;
      }
      return;
    }
    if ((adj[idx] & chosen_mask) == 0) {
      run(idx + 1, chosen_mask | (std::uint64_t{1} << idx), chosen + 1);
    }
    run(idx + 1, chosen_mask, chosen);
  }
};

struct ComponentOptimum {
  std::uint64_t size;
  std::vector<Element> least;  // lex-least maximum independent subset
  std::uint64_t count;
};

// Solves one vertex list given an adjacency test. Looped vertices can never
// be chosen, so only loop-free vertices become candidates.
template <typename LoopedFn, typename AdjacentFn>
ComponentOptimum solve_vertices(const std::vector<Element>& vertices,
                                LoopedFn looped, AdjacentFn adjacent,
                                bool with_count) {
  std::vector<Element> cand;
  for (Element v : vertices) {
    if (!looped(v)) cand.push_back(v);
  }
  if (cand.size() > 64) {
    throw feasibility_error(
        "component has more than 64 loop-free vertices; mask search refused");
  }
  std::sort(cand.begin(), cand.end());
  std::vector<std::uint64_t> adj(cand.size(), 0);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (adjacent(cand[i], cand[j])) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  MaskSearch search{adj, with_count};
  search.run(0, 0, 0);
  ComponentOptimum out{search.best, {}, search.count};
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (search.best_mask & (std::uint64_t{1} << i)) out.least.push_back(cand[i]);
  }
  return out;
}

void require_target(Element target, const PrimeModulus& m) {
  if (target >= m.p()) {
    throw std::domain_error("target " + std::to_string(target) +
                            " is out of range for p = " + std::to_string(m.p()));
  }
}

}  // namespace

OracleResult max_avoiding_subset_enum(const PrimeModulus& m, Element target,
                                      bool with_count) {
  require_target(target, m);
  if (m.p() > kSubsetEnumerationCap) {
    throw feasibility_error("subset enumeration is capped at p <= " +
                            std::to_string(kSubsetEnumerationCap) +
                            "; use the componentwise method");
  }
  std::vector<Element> all(m.p());
  for (Element v = 0; v < m.p(); ++v) all[v] = v;
  auto looped = [&](Element u) {
    return m.add(u, u) == target || m.mul(u, u) == target;
  };
  auto adjacent = [&](Element u, Element v) {
    return m.add(u, v) == target || m.mul(u, v) == target;
  };
  ComponentOptimum opt = solve_vertices(all, looped, adjacent, with_count);
  OracleResult r{m.p(), target, opt.size, std::move(opt.least),
                 OracleMethod::SubsetEnumeration, std::nullopt};
  if (with_count) r.optimum_count = opt.count;
  return r;
}

OracleResult max_avoiding_componentwise(const PrimeModulus& m, Element target,
                                        std::size_t component_cap,
                                        bool with_count) {
  require_target(target, m);
  if (m.p() > kComponentwiseCeiling) {
    throw feasibility_error("componentwise oracle is capped at p <= 2^26");
  }
  RelationGraph g{m, target};
  auto adjacent = [&](Element u, Element v) {
    return m.add(u, v) == target || m.mul(u, v) == target;
  };

  std::vector<bool> visited(m.p(), false);
  OracleResult r{m.p(), target, 0, {}, OracleMethod::ComponentwiseMIS, std::nullopt};
  std::uint64_t total_count = 1;
  for (Element y = 0; y < m.p(); ++y) {
    if (visited[y]) continue;
    ComponentSet comp = component_of(y, g, component_cap);
    for (Element v : comp.vertices) visited[v] = true;
    auto looped = [&comp](Element u) {
      return std::binary_search(comp.looped.begin(), comp.looped.end(), u);
    };
    ComponentOptimum opt = solve_vertices(comp.vertices, looped, adjacent, with_count);
    r.max_size += opt.size;
    r.witness_set.insert(r.witness_set.end(), opt.least.begin(), opt.least.end());
    if (with_count) {
      if (total_count > UINT64_MAX / opt.count) {
        throw feasibility_error("optimum count exceeds 64 bits");
      }
      total_count *= opt.count;
    }
  }
  // Components have disjoint vertex sets, so the concatenation of the
  // per-component lex-least maxima, sorted, is the global lex-least maximum
  // independent set; the sizes and counts add and multiply respectively.
  std::sort(r.witness_set.begin(), r.witness_set.end());
  if (with_count) r.optimum_count = total_count;
  return r;
}

std::uint64_t count_optima(const PrimeModulus& m, Element target) {
  return *max_avoiding_componentwise(m, target, kDefaultComponentCap, true)
              .optimum_count;
}

}  // namespace sumprod
