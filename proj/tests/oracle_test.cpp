#include <doctest.h>

#include "helpers.hpp"
#include "sumprod/extremal.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/orbit.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

TEST_CASE("subset enumeration on worked examples") {
  const OracleResult p5 = max_avoiding_subset_enum(PrimeModulus(5), 1);
  CHECK(p5.max_size == 2);
  CHECK(p5.witness_set == std::vector<Element>{0, 2});
  CHECK(p5.method == OracleMethod::SubsetEnumeration);
  CHECK(!p5.optimum_count.has_value());

  const OracleResult p13 = max_avoiding_subset_enum(PrimeModulus(13), 1);
  CHECK(p13.max_size == 6);

  // target 0: 0 is looped (0 + 0 = 0), x and -x are adjacent, x and x^-1
  // times nothing... the quotient neighbor is 0, so only negation pairs up.
  const OracleResult t0 = max_avoiding_subset_enum(PrimeModulus(5), 0);
  CHECK(t0.max_size == 2);
  CHECK(t0.witness_set == std::vector<Element>{1, 2});

  CHECK_THROWS_AS(max_avoiding_subset_enum(PrimeModulus(29), 1),
                  feasibility_error);
}

TEST_CASE("both oracle methods match the power-set ground truth") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    PrimeModulus m(p);
    for (Element target = 0; target < p; ++target) {
      const auto truth = testoracle::power_set_optimum(p, target);
      const OracleResult enumd = max_avoiding_subset_enum(m, target, true);
      const OracleResult comp = max_avoiding_componentwise(
          m, target, kDefaultComponentCap, true);
      CAPTURE(p);
      CAPTURE(target);
      CHECK(enumd.max_size == truth.max_size);
      CHECK(comp.max_size == truth.max_size);
      CHECK(enumd.optimum_count == truth.count);
      CHECK(comp.optimum_count == truth.count);
      CHECK(enumd.witness_set == truth.least);
      CHECK(comp.witness_set == truth.least);
    }
  }
}

TEST_CASE("componentwise oracle confirms the extremal value") {
  for (std::uint64_t p : testoracle::primes_in(5, 300)) {
    PrimeModulus m(p);
    const OracleResult r = max_avoiding_componentwise(m, 1);
    CAPTURE(p);
    CHECK(r.max_size == (p - 1) / 2);
    CHECK(r.method == OracleMethod::ComponentwiseMIS);
    // The constructed set is the lexicographically least maximum set.
    CHECK(r.witness_set == construct(m).elements);
    CHECK(check_avoidance(r.witness_set, 1, m).passed());
  }
}

TEST_CASE("methods agree across the subset-enumeration range") {
  for (std::uint64_t p : testoracle::primes_in(5, 23)) {
    PrimeModulus m(p);
    for (Element target : {Element{0}, Element{1}, Element{2}, Element{5} % p}) {
      const OracleResult a = max_avoiding_subset_enum(m, target, true);
      const OracleResult b =
          max_avoiding_componentwise(m, target, kDefaultComponentCap, true);
      CAPTURE(p);
      CAPTURE(target);
      CHECK(a.max_size == b.max_size);
      CHECK(a.witness_set == b.witness_set);
      CHECK(a.optimum_count == b.optimum_count);
    }
  }
}

TEST_CASE("count of maximum sets") {
  CHECK(count_optima(PrimeModulus(5), 1) == 1);
  CHECK(count_optima(PrimeModulus(7), 1) == 2);
  CHECK(count_optima(PrimeModulus(11), 1) == 2);
  CHECK(count_optima(PrimeModulus(13), 1) == 4);
  // Each six-cycle has two alternating maximum sets, each root pair two
  // singletons; the exceptionals are forced.
  for (std::uint64_t p : testoracle::primes_in(5, 200)) {
    PrimeModulus m(p);
    const CensusRecord c = census(m);
    std::uint64_t expected = 1;
    for (std::uint64_t i = 0; i < c.root_pair_components; ++i) expected *= 2;
    for (std::uint64_t i = 0; i < c.six_cycle_components; ++i) expected *= 2;
    CHECK(count_optima(m, 1) == expected);
  }
}

TEST_CASE("componentwise oracle rejects oversized inputs") {
  PrimeModulus big(next_prime_at_least(kComponentwiseCeiling + 1));
  CHECK_THROWS_AS(max_avoiding_componentwise(big, 1), feasibility_error);
  // Unbounded components at other targets surface the component cap.
  CHECK_THROWS_AS(max_avoiding_componentwise(PrimeModulus(1009), 3, 8),
                  feasibility_error);
}
