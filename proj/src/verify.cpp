#include "sumprod/verify.hpp"

#include <algorithm>

#include "sumprod/extremal.hpp"
#include "sumprod/rng.hpp"

namespace sumprod {

std::vector<Element> ResidueSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::uint64_t v = 0; v < mask_.size(); ++v) {
    if (mask_[v]) out.push_back(v);
  }
  return out;
}

std::optional<Element> ResidueSet::least_absent() const {
  for (std::uint64_t v = 0; v < mask_.size(); ++v) {
    if (!mask_[v]) return v;
  }
  return std::nullopt;
}

namespace {

void require_dense_feasible(const PrimeModulus& m, const char* what) {
  if (m.p() > kDenseSetCeiling) {
    throw feasibility_error(std::string(what) +
                            " needs a dense mask over F_p; capped at p <= 2^27");
  }
}

void require_members(std::span<const Element> a, const PrimeModulus& m) {
  for (Element v : a) {
    if (v >= m.p()) {
      throw std::domain_error("set element " + std::to_string(v) +
                              " is out of range for p = " + std::to_string(m.p()));
    }
  }
}

}  // namespace

ResidueSet sumset(std::span<const Element> a, const PrimeModulus& m) {
  require_dense_feasible(m, "sumset");
  require_members(a, m);
  ResidueSet out(m.p());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      out.insert(m.add(a[i], a[j]));
    }
  }
  return out;
}

ResidueSet productset(std::span<const Element> a, const PrimeModulus& m) {
  require_dense_feasible(m, "productset");
  require_members(a, m);
  ResidueSet out(m.p());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      out.insert(m.mul(a[i], a[j]));
    }
  }
  return out;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::ExhaustivePairs: return "ExhaustivePairs";
    case Method::NeighborExclusion: return "NeighborExclusion";
    case Method::SampledNeighborExclusion: return "SampledNeighborExclusion";
  }
  return "?";
}

namespace {

// Both exact methods record the same two witnesses: the lexicographically
// least sum-violating pair and the least product-violating pair, in that
// order, so their reports match bit for bit.
struct WitnessRecorder {
  std::optional<Witness> sum;
  std::optional<Witness> product;

  void note(WitnessKind kind, Element x, Element y) {
    auto& slot = kind == WitnessKind::Sum ? sum : product;
    if (!slot) slot = Witness{kind, std::min(x, y), std::max(x, y)};
  }
  void flush(VerificationReport& r) const {
    r.sum_avoids_target = !sum.has_value();
    r.product_avoids_target = !product.has_value();
    if (sum) r.witnesses.push_back(*sum);
    if (product) r.witnesses.push_back(*product);
  }
};

// All |a|(|a|+1)/2 pairs, in lexicographic order over the sorted members,
// each tested directly against the target.
void scan_pairs(std::span<const Element> sorted, Element target,
                const PrimeModulus& m, WitnessRecorder& w) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i; j < sorted.size(); ++j) {
      if (w.sum && w.product) return;
      if (m.add(sorted[i], sorted[j]) == target) {
        w.note(WitnessKind::Sum, sorted[i], sorted[j]);
      }
      if (m.mul(sorted[i], sorted[j]) == target) {
        w.note(WitnessKind::Product, sorted[i], sorted[j]);
      }
    }
  }
}

// For each member x the only pair completions are target - x and
// target / x; ascending x with the partner filtered to >= x visits pairs in
// the same lexicographic order the pair scan does.
void scan_neighbors(std::span<const Element> sorted, Element target,
                    const PrimeModulus& m, WitnessRecorder& w) {
  auto present = [&sorted](Element v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  for (Element x : sorted) {
    if (w.sum && w.product) return;
    Element s = m.sub(target, x);
    if (s >= x && present(s)) w.note(WitnessKind::Sum, x, s);
    if (x != 0) {
      Element q = m.mul(target, m.inv(x));
      if (q >= x && present(q)) w.note(WitnessKind::Product, x, q);
    } else if (target == 0 && present(0)) {
      // 0 * 0 = 0 is the least product pair involving 0, so the ones the
      // quotient cannot see (0 * y = 0) are never the lex-least violation.
      w.note(WitnessKind::Product, 0, 0);
    }
  }
}

}  // namespace

VerificationReport check_avoidance(std::span<const Element> a, Element target,
                                   const PrimeModulus& m) {
  Method method = a.size() <= kPairEnumerationCutoff ? Method::ExhaustivePairs
                                                     : Method::NeighborExclusion;
  return check_avoidance(a, target, m, method);
}

VerificationReport check_avoidance(std::span<const Element> a, Element target,
                                   const PrimeModulus& m, Method method) {
  require_members(a, m);
  if (target >= m.p()) {
    throw std::domain_error("target " + std::to_string(target) +
                            " is out of range for p = " + std::to_string(m.p()));
  }
  if (method == Method::SampledNeighborExclusion) {
    throw std::invalid_argument(
        "sampled verification applies to the implicit set; use verify_implicit");
  }
  std::vector<Element> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  VerificationReport r{};
  r.p = m.p();
  r.set_size = sorted.size();
  r.size_matches_formula = sorted.size() == (m.p() - 1) / 2;
  r.method = method;
  WitnessRecorder w;
  if (method == Method::ExhaustivePairs) {
    scan_pairs(sorted, target, m, w);
  } else {
    scan_neighbors(sorted, target, m, w);
  }
  w.flush(r);
  return r;
}

CoverResult check_sumset_covers(std::span<const Element> a, const PrimeModulus& m) {
  ResidueSet s = sumset(a, m);
  auto missing = s.least_absent();
  return {!missing.has_value(), missing};
}

VerificationReport verify_implicit(const PrimeModulus& m, std::uint64_t samples,
                                   std::uint64_t seed) {
  ExtremalSet set = implicit_set(m);
  VerificationReport r{};
  r.p = m.p();
  r.set_size = (m.p() - 1) / 2;
  r.size_matches_formula = true;
  r.method = Method::SampledNeighborExclusion;
  r.samples = samples;
  WitnessRecorder w;

  // Fixed points first: 0 and 2 must be in; 1, -1 and 1/2 must be out
  // (each would pair with a fixed member to hit the target).
  if (!set.contains(0) || !set.contains(2)) r.size_matches_formula = false;
  if (set.contains(1)) w.note(WitnessKind::Sum, 0, 1);  // 0 + 1 = 1
  if (set.contains(m.minus_one())) {
    w.note(WitnessKind::Sum, 2, m.minus_one());  // 2 + (-1) = 1
  }
  if (set.contains(m.half())) {
    w.note(WitnessKind::Product, 2, m.half());  // 2 * (1/2) = 1
  }

  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (w.sum && w.product) break;
    Element y = rng.below(m.p());
    if (!set.contains(y)) continue;
    Element s = m.sub(1, y);
    if (set.contains(s)) w.note(WitnessKind::Sum, y, s);
    if (y != 0) {
      Element q = m.inv(y);
      if (set.contains(q)) w.note(WitnessKind::Product, y, q);
    }
  }
  w.flush(r);
  return r;
}

}  // namespace sumprod
