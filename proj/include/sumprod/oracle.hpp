#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/fp.hpp"
#include "sumprod/graph.hpp"

namespace sumprod {

enum class OracleMethod { SubsetEnumeration, ComponentwiseMIS };

const char* oracle_method_name(OracleMethod m);

// Ground truth for the extremal problem: the exact maximum size of a set
// avoiding `target` in both its sumset and its productset, i.e. a maximum
// independent set in the relation graph.
struct OracleResult {
  std::uint64_t p;
  Element target;
  std::uint64_t max_size;
  std::vector<Element> witness_set;  // lexicographically least maximum set
  OracleMethod method;
  std::optional<std::uint64_t> optimum_count;  // number of maximum sets
};

inline constexpr std::uint64_t kSubsetEnumerationCap = 25;

// Branch-and-bound over all subsets of F_p, elements in increasing order,
// include before exclude. Adjacency is recomputed from the defining
// relations u + v = t, u * v = t so this method shares no code with the
// component machinery it cross-checks.
OracleResult max_avoiding_subset_enum(const PrimeModulus& m, Element target,
                                      bool with_count = false);

// Sum of per-component maxima; maximum independence is additive across
// connected components. Components come from component_of and are solved
// by the same branch-and-bound, so the only structural input is graph
// connectivity, never the orbit classification.
OracleResult max_avoiding_componentwise(const PrimeModulus& m, Element target,
                                        std::size_t component_cap = kDefaultComponentCap,
                                        bool with_count = false);

// Cap for the componentwise sweep over all of F_p (it keeps a visited bit
// per residue).
inline constexpr std::uint64_t kComponentwiseCeiling = std::uint64_t{1} << 26;

// Number of maximum independent sets: the product over components of the
// per-component optimum counts.
std::uint64_t count_optima(const PrimeModulus& m, Element target);

}  // namespace sumprod
