#include <doctest.h>

#include "hsearch/classify.hpp"
#include "hsearch/error.hpp"
#include "oracles.hpp"

using namespace hsearch;

TEST_SUITE("classify") {
  TEST_CASE("forced_divisors examples") {
    using R = ForcedRule;
    CHECK(forced_divisors(10) == std::vector<ForcedDivisor>{{10, 121, R::square_of_next_prime}});
    CHECK(forced_divisors(6) == std::vector<ForcedDivisor>{{6, 49, R::square_of_next_prime}});
    CHECK(forced_divisors(7).empty());
    CHECK(forced_divisors(24) == std::vector<ForcedDivisor>{{24, 5, R::sqrt_form}});
    CHECK(forced_divisors(12) == std::vector<ForcedDivisor>{{12, 169, R::square_of_next_prime}});
    CHECK(forced_divisors(20) == std::vector<ForcedDivisor>{{20, 5, R::root_form}});
    CHECK(forced_divisors(0).empty());
  }

  TEST_CASE("every forced divisor divides the exact numerator") {
    std::size_t seen = 0;
    for (u64 n = 1; n <= 500; ++n) {
      const mpz_class num = oracle::harmonic_exact(n).get_num();
      for (const ForcedDivisor& d : forced_divisors(n)) {
        ++seen;
        REQUIRE(mpz_divisible_ui_p(num.get_mpz_t(), d.divisor) != 0);
      }
    }
    CHECK(seen > 90);
  }

  TEST_CASE("wolstenholme_check vanishes for p > 3") {
    for (u64 p : oracle::primes_between(5, 2000)) {
      const Residue r = wolstenholme_check(p);
      REQUIRE(r.value == 0);
      REQUIRE(r.modulus == u128{p} * p);
    }
    CHECK_THROWS_AS(wolstenholme_check(3), Error);
  }

  TEST_CASE("harmonic_scan examples") {
    CHECK(harmonic_scan(7).empty());
    CHECK(harmonic_scan(11) == std::vector<u64>{3});
    const auto s29 = harmonic_scan(29);
    CHECK(std::find(s29.begin(), s29.end(), 13u) != s29.end());
    const auto s137 = harmonic_scan(137);
    CHECK(std::find(s137.begin(), s137.end(), 5u) != s137.end());
    CHECK(harmonic_scan(11, 10) == std::vector<u64>{3, 7, 10});
    CHECK_THROWS_AS(harmonic_scan(11, 11), Error);
  }

  TEST_CASE("harmonic_scan matches the oracle and respects the bound") {
    for (u64 p : oracle::primes_between(5, 1000)) {
      std::vector<u64> expect;
      for (u64 n = 1; n <= (p - 3) / 2; ++n) {
        if (oracle::harmonic_mod(n, p) == 0) expect.push_back(n);
      }
      REQUIRE(harmonic_scan(p) == expect);
    }
  }

  TEST_CASE("linear_form_scan examples") {
    const auto twelve = linear_form_scan(12, 1, 10000, false);
    REQUIRE(twelve.size() == 1);
    CHECK(twelve[0] == LinearFormHit{12, 1, 10, 121, false});
    for (u64 r = 1; r < 5; ++r) CHECK(linear_form_scan(5, r, 2000, true).empty());
    const auto two = linear_form_scan(2, 1, 600, true);
    CHECK(std::find(two.begin(), two.end(), LinearFormHit{2, 1, 546, 1093, true}) != two.end());
    CHECK_THROWS_AS(linear_form_scan(3, 1, kLinearFormCeiling + 1, false), Error);
    CHECK_THROWS_AS(linear_form_scan(0, 1, 10, false), Error);
  }

  TEST_CASE("linear_form_scan agrees with the exact numerator") {
    for (u64 k : {3ull, 7ull, 24ull}) {
      for (u64 r = 1; r < k; ++r) {
        std::vector<LinearFormHit> expect;
        for (u64 n = 1; n <= 300; ++n) {
          const u64 d = k * n + r;
          const mpz_class num = oracle::harmonic_exact(n).get_num();
          if (mpz_divisible_ui_p(num.get_mpz_t(), d) != 0) {
            expect.push_back({k, r, n, d, oracle::is_prime_trial(d)});
          }
        }
        REQUIRE(linear_form_scan(k, r, 300, false) == expect);
      }
    }
  }
}
