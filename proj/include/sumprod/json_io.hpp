#pragma once

#include <string>

#include <json.hpp>

#include "sumprod/extremal.hpp"
#include "sumprod/graph.hpp"
#include "sumprod/orbit.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/refute.hpp"
#include "sumprod/verify.hpp"

namespace sumprod {

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return std::string(out.rbegin(), out.rend());
}

inline void to_json(nlohmann::json& j, const Witness& w) {
  j = {{"kind", w.kind == WitnessKind::Sum ? "sum" : "product"},
       {"pair", {w.a, w.b}}};
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"p", r.p},
       {"size", r.set_size},
       {"sum_ok", r.sum_avoids_target},
       {"product_ok", r.product_avoids_target},
       {"size_ok", r.size_matches_formula},
       {"method", method_name(r.method)}};
  if (r.method == Method::SampledNeighborExclusion) j["samples"] = r.samples;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
}

inline void to_json(nlohmann::json& j, const ComponentSet& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : c.edges) edges.push_back({u, v});
  j = {{"vertices", c.vertices}, {"edges", edges}, {"looped", c.looped}};
}

inline void to_json(nlohmann::json& j, const Component& c) {
  j = {{"kind", component_kind_name(c.kind)},
       {"representative", c.representative},
       {"members", c.members},
       {"delta_contribution", c.delta_contribution}};
}

inline void to_json(nlohmann::json& j, const CensusRecord& r) {
  j = {{"p", r.p},
       {"delta", r.delta},
       {"pair_components", r.pair_components},
       {"triple_components", r.triple_components},
       {"root_pair_components", r.root_pair_components},
       {"six_cycle_components", r.six_cycle_components},
       {"checksum", census_checksum(r)}};
}

inline void to_json(nlohmann::json& j, const ExtremalSet& s) {
  j = {{"p", s.modulus.p()},
       {"size", s.declared_size},
       {"target", 1},
       {"elements", s.elements}};
}

inline void to_json(nlohmann::json& j, const OracleResult& r) {
  j = {{"p", r.p},
       {"target", r.target},
       {"max_size", r.max_size},
       {"witness", r.witness_set},
       {"method", oracle_method_name(r.method)}};
  if (r.optimum_count) j["optimum_count"] = *r.optimum_count;
}

inline void to_json(nlohmann::json& j, const RefutationWitness& w) {
  j = {{"c", std::to_string(w.c.num) + "/" + std::to_string(w.c.den)},
       {"p0", w.p0},
       {"p", w.p},
       {"threshold",
        u128_to_string(w.threshold_num) + "/" + u128_to_string(w.threshold_den)},
       {"size", w.set_size},
       {"verification", w.verification}};
}

}  // namespace sumprod
