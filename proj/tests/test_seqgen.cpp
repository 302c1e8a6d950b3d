#include <doctest.h>

#include <cmath>

#include "bhn/error.hpp"
#include "bhn/seqgen.hpp"
#include "oracles.hpp"

using namespace bhn;

TEST_CASE("primality against a sieve and trial division") {
  const auto prime = oracle::sieve(200000);
  for (std::uint64_t n = 0; n <= 200000; ++n) REQUIRE(is_prime(n) == prime[n]);
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK_FALSE(is_prime((1ULL << 61) + 1));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  for (std::uint64_t n = (1ULL << 40); n < (1ULL << 40) + 2000; ++n)
    REQUIRE(is_prime(n) == oracle::trial_division_prime(n));
  CHECK(next_prime(8) == 11);
  CHECK(next_prime(11) == 11);
}

TEST_CASE("f and d") {
  CHECK(f_of(GrowthProfile::toy_affine(1, 4), 1) == 5);
  // log F = e^e at the shifted index: f = ceil(e^e / e).
  const double ee = std::exp(std::exp(1.0));
  const GrowthProfile t = GrowthProfile::table({1.0, ee}, 1.0, {1.0, 1.0, 1.0});
  CHECK(f_of(t, 1) == static_cast<std::int64_t>(std::ceil(ee / std::exp(1.0))));
  CHECK(f_of(t, 1) == 6);
  CHECK_THROWS_AS(f_of(GrowthProfile::table({2.0, 2.5}, 1.0, {}), 1), ProfileError);
  CHECK(divisor_for(5) == 5);
  CHECK(divisor_for(8) == 11);
  CHECK(divisor_for(100) == 101);
  CHECK_THROWS_AS(GrowthProfile::table({3.0, 2.0}, 1.0, {}), ProfileError);
}

TEST_CASE("greedy radii of the default toy profile") {
  SequenceSet s(GrowthProfile::default_toy());
  s.extend_to(11);
  const std::int64_t d[] = {23, 37, 53, 71, 89, 101, 127, 137, 149, 167};
  const std::int64_t r[] = {2, 3, 5, 7, 8, 9, 11, 12, 13, 15, 17};
  for (int i = 0; i < 10; ++i) CHECK(s.d(i + 1) == d[i]);
  for (int i = 0; i < 11; ++i) CHECK(s.r(i + 1) == r[i]);
  CHECK(r_of(s, 1) == 2);
  CHECK(d_of(s, 3) == 53);
  CHECK_THROWS_AS(s.r(12), NotMaterialized);
}

TEST_CASE("hand-checked radius") {
  SequenceSet s(GrowthProfile::toy_table({97, 101}));
  s.extend_to(2);
  CHECK(s.r(1) == 2);
  CHECK(s.r(2) == 3);
  CHECK(radii_compatible(3, 101, 2, 97));
  CHECK_FALSE(radii_compatible(4, 101, 2, 97));
}

TEST_CASE("greedy radii against an exhaustive first-fit scan") {
  SequenceSet s(GrowthProfile::default_toy());
  s.extend_to(120);
  for (std::int64_t n = 2; n <= 120; ++n) {
    const std::int64_t q = s.q(n), dn = s.d(n);
    std::int64_t expected = 0;
    for (std::int64_t k = q + 1; k < q + 17 * n && expected == 0; ++k) {
      bool ok = true;
      for (std::int64_t m = 1; m < n && ok; ++m) {
        const std::int64_t dm = s.d(m), rm = s.r(m);
        const auto hits = [](std::int64_t x, std::int64_t y, std::int64_t mod) {
          for (std::int64_t c : {y, -y, 2 * y, -2 * y})
            if (((x - c) % mod + mod) % mod == 0) return true;
          return false;
        };
        ok = !hits(k, rm, dm) && !hits(rm, k, dn);
      }
      if (ok) expected = k;
    }
    CHECK(s.r(n) == expected);
    CHECK(s.certificate(n).all());
  }
}

TEST_CASE("failure modes") {
  SequenceSet small(GrowthProfile::toy_affine(1, 4));
  CHECK_THROWS_AS(small.extend_to(3), DivisorTooSmall);
  CHECK_NOTHROW(small.extend_divisors_to(10));
  CHECK_THROWS_AS(divisor_for(2), PreconditionError);
}

TEST_CASE("hypothesis validation") {
  SequenceSet b(GrowthProfile::default_builtin());
  b.extend_to(100);
  const HypothesisReport rb = validate_hypotheses(b, 100);
  CHECK(rb.all_passed());
  CHECK(rb.series_sum < 1.0 / 16.0);

  SequenceSet fives(GrowthProfile::toy_table(std::vector<std::int64_t>(10, 5)));
  fives.extend_divisors_to(10);
  const HypothesisReport rf = validate_hypotheses(fives, 10);
  REQUIRE(rf.find("series_bound"));
  CHECK_FALSE(rf.find("series_bound")->passed);
  CHECK(rf.find("series_bound")->first_failure == 1);

  SequenceSet toy(GrowthProfile::default_toy());
  toy.extend_to(200);
  const HypothesisReport rt = validate_hypotheses(toy, 200);
  for (const char* name : {"odd_prime", "bertrand", "monotone", "q_range", "divisor_16n", "r_base", "r_range",
                           "r_third", "r_congruence"})
    CHECK_MESSAGE(rt.find(name)->passed, name);
}
