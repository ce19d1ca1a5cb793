#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sumprod/extremal.hpp"
#include "sumprod/graph.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

namespace {

bool same_witness(const Witness& x, const Witness& y) {
  return x.kind == y.kind && x.a == y.a && x.b == y.b;
}

// Agreement between the two exact methods: everything but the method tag.
bool same_verdict(const VerificationReport& x, const VerificationReport& y) {
  if (x.p != y.p || x.set_size != y.set_size) return false;
  if (x.sum_avoids_target != y.sum_avoids_target) return false;
  if (x.product_avoids_target != y.product_avoids_target) return false;
  if (x.size_matches_formula != y.size_matches_formula) return false;
  if (x.witnesses.size() != y.witnesses.size()) return false;
  for (std::size_t i = 0; i < x.witnesses.size(); ++i) {
    if (!same_witness(x.witnesses[i], y.witnesses[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sumset and productset on small examples") {
  PrimeModulus p5(5), p7(7);

  ResidueSet s = sumset(std::vector<Element>{0, 2}, p5);
  CHECK(s.elements() == std::vector<Element>{0, 2, 4});
  CHECK(s.size() == 3);
  CHECK(s.universe() == 5);
  CHECK(s.least_absent() == Element{1});

  CHECK(sumset(std::vector<Element>{}, p7).elements().empty());
  CHECK(sumset(std::vector<Element>{}, p7).least_absent() == Element{0});

  ResidueSet full = sumset(std::vector<Element>{0, 1, 2}, p5);
  CHECK(full.size() == 5);
  CHECK(!full.least_absent().has_value());

  CHECK(productset(std::vector<Element>{0, 2, 3}, p7).elements() ==
        std::vector<Element>{0, 2, 4, 6});
  CHECK(productset(std::vector<Element>{1}, p7).elements() ==
        std::vector<Element>{1});
  CHECK(productset(std::vector<Element>{0}, p5).elements() ==
        std::vector<Element>{0});
}

TEST_CASE("check_avoidance accepts the extremal set under both methods") {
  for (std::uint64_t p : testoracle::primes_in(5, 300)) {
    PrimeModulus m(p);
    const ExtremalSet a = construct(m);
    for (Method method : {Method::ExhaustivePairs, Method::NeighborExclusion}) {
      const VerificationReport r = check_avoidance(a.elements, 1, m, method);
      CAPTURE(p);
      CAPTURE(method_name(method));
      CHECK(r.passed());
      CHECK(r.p == p);
      CHECK(r.set_size == (p - 1) / 2);
      CHECK(r.witnesses.empty());
      CHECK(r.samples == 0);
    }
  }
}

TEST_CASE("failure witnesses are the lexicographically least pairs") {
  PrimeModulus p5(5), p11(11);

  SUBCASE("sum and product violations together") {
    const VerificationReport r =
        check_avoidance(std::vector<Element>{0, 1}, 1, p5);
    CHECK(!r.passed());
    CHECK(!r.sum_avoids_target);
    CHECK(!r.product_avoids_target);
    CHECK(r.size_matches_formula);  // size 2 == (5-1)/2; the pair checks fail
    REQUIRE(r.witnesses.size() == 2);
    CHECK(same_witness(r.witnesses[0], Witness{WitnessKind::Sum, 0, 1}));
    CHECK(same_witness(r.witnesses[1], Witness{WitnessKind::Product, 1, 1}));
  }

  SUBCASE("product-only violation") {
    const VerificationReport r =
        check_avoidance(std::vector<Element>{3, 4}, 1, p11);
    CHECK(r.sum_avoids_target);
    CHECK(!r.product_avoids_target);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(same_witness(r.witnesses[0], Witness{WitnessKind::Product, 3, 4}));
  }

  SUBCASE("diagonal sum pair at one half") {
    const VerificationReport r =
        check_avoidance(std::vector<Element>{6}, 1, p11);  // 6 + 6 = 1 mod 11
    CHECK(!r.sum_avoids_target);
    CHECK(r.product_avoids_target);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(same_witness(r.witnesses[0], Witness{WitnessKind::Sum, 6, 6}));
  }

  SUBCASE("diagonal product pair at minus one") {
    const VerificationReport r =
        check_avoidance(std::vector<Element>{10}, 1, p11);  // 10 * 10 = 1
    CHECK(r.sum_avoids_target);
    CHECK(!r.product_avoids_target);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(same_witness(r.witnesses[0], Witness{WitnessKind::Product, 10, 10}));
  }
}

TEST_CASE("the two exact methods give identical reports") {
  SplitMix64 rng(2024);
  for (std::uint64_t p : {5ull, 11ull, 31ull, 101ull}) {
    PrimeModulus m(p);
    for (Element target : {Element{0}, Element{1}, Element{5} % p}) {
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t size = 1 + rng.below(p - 1);
        const auto a = testoracle::random_distinct(p, size, rng);
        const auto exhaustive =
            check_avoidance(a, target, m, Method::ExhaustivePairs);
        const auto neighbor =
            check_avoidance(a, target, m, Method::NeighborExclusion);
        CAPTURE(p);
        CAPTURE(target);
        CHECK(same_verdict(exhaustive, neighbor));
        CHECK(exhaustive.method == Method::ExhaustivePairs);
        CHECK(neighbor.method == Method::NeighborExclusion);

        // Avoidance of the target is exactly independence in G_target.
        auto sorted = a;
        std::sort(sorted.begin(), sorted.end());
        const bool avoids =
            exhaustive.sum_avoids_target && exhaustive.product_avoids_target;
        CHECK(avoids == independent(sorted, RelationGraph{m, target}));
      }
    }
  }
}

TEST_CASE("avoidance is monotone under taking subsets") {
  PrimeModulus m(61);
  const ExtremalSet a = construct(m);
  std::vector<Element> half_of_it;
  for (std::size_t i = 0; i < a.elements.size(); i += 2) {
    half_of_it.push_back(a.elements[i]);
  }
  const VerificationReport r = check_avoidance(half_of_it, 1, m);
  CHECK(r.sum_avoids_target);
  CHECK(r.product_avoids_target);
  CHECK(!r.size_matches_formula);
  CHECK(!r.passed());
}

TEST_CASE("check_sumset_covers") {
  PrimeModulus p5(5);
  CHECK(check_sumset_covers(std::vector<Element>{0, 1, 2}, p5).covers);
  const CoverResult miss = check_sumset_covers(std::vector<Element>{0}, p5);
  CHECK(!miss.covers);
  CHECK(miss.least_missing == Element{1});

  // The extremal set misses exactly the target.
  for (std::uint64_t p : testoracle::primes_in(5, 211)) {
    PrimeModulus m(p);
    const CoverResult c = check_sumset_covers(construct(m).elements, m);
    CAPTURE(p);
    CHECK(!c.covers);
    CHECK(c.least_missing == Element{1});
  }

  // Anything larger than p/2 covers.
  SplitMix64 rng(7);
  for (std::uint64_t p : {5ull, 11ull, 31ull, 101ull}) {
    PrimeModulus m(p);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = testoracle::random_distinct(p, p / 2 + 1, rng);
      CHECK(check_sumset_covers(a, m).covers);
    }
  }
}

TEST_CASE("verify_implicit") {
  SUBCASE("matches the explicit verdict at a small prime") {
    PrimeModulus m(101);
    const VerificationReport r = verify_implicit(m, 500, 7);
    CHECK(r.passed());
    CHECK(r.method == Method::SampledNeighborExclusion);
    CHECK(r.samples == 500);
    CHECK(r.set_size == 50);
    CHECK(r.witnesses.empty());
    CHECK(check_avoidance(construct(m).elements, 1, m).passed());
  }

  SUBCASE("zero samples still pins the fixed memberships") {
    const VerificationReport r = verify_implicit(PrimeModulus(7), 0, 1);
    CHECK(r.passed());
    CHECK(r.samples == 0);
  }

  SUBCASE("large primes") {
    PrimeModulus p31(next_prime_at_least(std::uint64_t{1} << 31));
    CHECK(verify_implicit(p31, 10000, 42).passed());
    PrimeModulus p61(next_prime_at_least(std::uint64_t{1} << 61));
    const VerificationReport r = verify_implicit(p61, 10000, 42);
    CHECK(r.passed());
    CHECK(r.set_size == (p61.p() - 1) / 2);
  }

  SUBCASE("deterministic in the seed") {
    PrimeModulus m(next_prime_at_least(std::uint64_t{1} << 40));
    const VerificationReport a = verify_implicit(m, 2000, 9);
    const VerificationReport b = verify_implicit(m, 2000, 9);
    CHECK(same_verdict(a, b));
    CHECK(a.samples == b.samples);
  }
}

TEST_CASE("error paths") {
  PrimeModulus p11(11);
  CHECK_THROWS_AS(check_avoidance(std::vector<Element>{11}, 1, p11),
                  std::domain_error);
  CHECK_THROWS_AS(check_avoidance(std::vector<Element>{3}, 11, p11),
                  std::domain_error);
  CHECK_THROWS_AS(check_avoidance(std::vector<Element>{3}, 1, p11,
                                  Method::SampledNeighborExclusion),
                  std::invalid_argument);
  CHECK_THROWS_AS(sumset(std::vector<Element>{11}, p11), std::domain_error);

  PrimeModulus huge(next_prime_at_least(kDenseSetCeiling + 1));
  CHECK_THROWS_AS(sumset(std::vector<Element>{0}, huge), feasibility_error);
  CHECK_THROWS_AS(productset(std::vector<Element>{0}, huge), feasibility_error);
  CHECK_THROWS_AS(check_sumset_covers(std::vector<Element>{0}, huge),
                  feasibility_error);
}
