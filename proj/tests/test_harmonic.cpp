#include <doctest.h>

#include <random>

#include "hsearch/error.hpp"
#include "hsearch/harmonic.hpp"
#include "hsearch/kernels.hpp"
#include "hsearch/quotients.hpp"
#include "oracles.hpp"

using namespace hsearch;

TEST_SUITE("kernels") {
  TEST_CASE("reference, serial and parallel kernels agree") {
    std::mt19937_64 rng(3);
    for (u64 p : {7ull, 10007ull, 1000003ull, 4294967311ull, 1099511627689ull}) {
      for (int trial = 0; trial < 20; ++trial) {
        const u64 len = std::min<u64>(p - 1, 1 + rng() % 5000);
        const u64 a = 1 + rng() % (p - len);
        const u64 b = a + len - 1;
        const u64 step = 1 + rng() % 3;
        const u64 expect = reference::reciprocal_sum(p, a, b, step);
        REQUIRE(kernels::reciprocal_sum(p, a, b, step) == expect);
        REQUIRE(kernels::reciprocal_sum_parallel(p, a, b, step) == expect);
      }
    }
  }

  TEST_CASE("parallel kernel splits long progressions") {
    const u64 p = 1000003;
    const u64 b = kernels::kParallelThreshold * 3;
    CHECK(kernels::reciprocal_sum_parallel(p, 1, b) == reference::reciprocal_sum(p, 1, b));
    CHECK(kernels::reciprocal_sum_parallel(p, 3, b, 2) == reference::reciprocal_sum(p, 3, b, 2));
  }

  TEST_CASE("kernel edge cases") {
    CHECK(kernels::reciprocal_sum(11, 5, 4) == 0);
    CHECK(kernels::reciprocal_sum(2, 1, 1) == 1);
    CHECK_THROWS_AS(kernels::reciprocal_sum(11, 0, 3), Error);
    CHECK_THROWS_AS(kernels::reciprocal_sum(11, 1, 11), Error);
    CHECK_THROWS_AS(kernels::reciprocal_sum(11, 1, 3, 0), Error);
  }
}

TEST_SUITE("harmonic") {
  TEST_CASE("h_oracle examples") {
    CHECK(h_oracle(0, 11) == 0);
    CHECK(h_oracle(2, 7) == 5);
    CHECK(h_oracle(5, 137) == 0);
    CHECK(h_oracle(10, 61) == 0);
    try {
      h_oracle(11, 11);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::index_out_of_range);
    }
  }

  TEST_CASE("h_oracle matches the Fermat-inverse oracle") {
    for (u64 p : oracle::primes_between(3, 400)) {
      for (u64 n = 0; n < p; n += 1 + p / 17) REQUIRE(h_oracle(n, p) == oracle::harmonic_mod(n, p));
    }
  }

  TEST_CASE("h_oracle_many matches single evaluations") {
    const u64 p = 9973;
    const std::vector<u64> idx = {4986, 0, 17, 831, 831, 1};
    const auto got = h_oracle_many(p, idx);
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(got[i] == h_oracle(idx[i], p));
  }

  TEST_CASE("h_direct examples") {
    CHECK(h_direct(1, 7) == 1);
    CHECK(h_direct(10, 61) == 0);
    CHECK(h_direct(100, 9973) == h_oracle(100, 9973));
    CHECK(h_direct(0, 5) == 0);
    CHECK_THROWS_AS(h_direct(7, 7), Error);
  }

  TEST_CASE("h_direct equals h_oracle on random pairs") {
    std::mt19937_64 rng(500);
    const auto primes = oracle::primes_between(2, 100000);
    for (int i = 0; i < 500; ++i) {
      const u64 p = primes[rng() % primes.size()];
      const u64 n = rng() % p;
      REQUIRE(h_direct(n, p) == h_oracle(n, p));
    }
  }

  TEST_CASE("partial_sum examples and additivity") {
    CHECK(partial_sum(19, 5, 4) == 0);
    CHECK(partial_sum(19, 2, 2) == 10);
    CHECK_THROWS_AS(partial_sum(19, 1, 19), Error);
    std::mt19937_64 rng(9);
    for (u64 p : {101ull, 7919ull, 104729ull}) {
      for (int i = 0; i < 50; ++i) {
        u64 x[3] = {1 + rng() % (p - 1), 1 + rng() % (p - 1), 1 + rng() % (p - 1)};
        std::sort(x, x + 3);
        REQUIRE(partial_sum(p, 1, x[1]) == h_oracle(x[1], p));
        REQUIRE(partial_sum(p, x[0], x[2]) ==
                (partial_sum(p, x[0], x[1]) + partial_sum(p, x[1] + 1, x[2])) % p);
      }
    }
  }

  TEST_CASE("h_formula examples") {
    CHECK(h_formula(12, 13).residue == 1);
    CHECK(h_formula(24, 137).residue == 0);
    CHECK(h_formula(10, 227).residue == 0);
    CHECK(h_formula(6, 61).residue == 0);
    CHECK(h_formula(8, 269).residue == 0);
    const HarmonicResidue r = h_formula(24, 137);
    CHECK(r.m == 5);
    CHECK(r.N == 24);
    CHECK(r.method == Method::formula);
  }

  TEST_CASE("h_formula preconditions") {
    CHECK(h_formula(2, 5).residue == 4);  // H_2 = 3/2
    CHECK(h_oracle(2, 5) == 4);
    CHECK_THROWS_AS(h_formula(2, 2), Error);
    CHECK_THROWS_AS(h_formula(5, 5), Error);
    CHECK_THROWS_AS(h_formula(7, 101), Error);
    CHECK_THROWS_AS(h_formula(24, 23), Error);
    CHECK_THROWS_AS(h_formula(8, 91), Error);
  }

  TEST_CASE("h_formula equals the oracle for all small primes") {
    for (u64 p : oracle::primes_between(3, 3000)) {
      for (int N : kFormulaNs) {
        if (p <= static_cast<u64>(N)) continue;
        REQUIRE(h_formula(N, p).residue == h_oracle(p / static_cast<u64>(N), p));
      }
    }
  }

  TEST_CASE("N = 6: Lehmer form equals the q_p(432) form") {
    for (u64 p : oracle::primes_between(7, 10000)) {
      const u64 inv2 = (p + 1) / 2;
      const u64 q432_form = (p - fermat_quotient(432, p)) % p * inv2 % p;
      REQUIRE(h_formula(6, p).residue == q432_form);
    }
  }

  TEST_CASE("h9_from_h18 examples") {
    const HarmonicResidue h18{19, 18, 1, 1, Method::oracle};
    CHECK(h9_from_h18(19, h18).residue == 11);
    CHECK(h_oracle(2, 19) == 11);
    const HarmonicResidue h18_677{677, 18, 37, h_oracle(37, 677), Method::oracle};
    CHECK(h9_from_h18(677, h18_677).residue == 0);
    CHECK_THROWS_AS(h9_from_h18(23, h18), Error);
    CHECK_THROWS_AS(h9_from_h18(19, HarmonicResidue{19, 17, 1, 1, Method::oracle}), Error);
  }

  TEST_CASE("h9_from_h18 sweep") {
    for (u64 p : oracle::primes_between(20, 10000)) {
      const HarmonicResidue h18{p, 18, p / 18, h_oracle(p / 18, p), Method::oracle};
      REQUIRE(h9_from_h18(p, h18).residue == h_oracle(p / 9, p));
    }
  }

  TEST_CASE("extension plans tile the index range") {
    std::vector<int> all;
    for (int N = 2; N <= 46; ++N) all.push_back(N);
    const auto plans = extension_plans(all);
    REQUIRE(plans.size() == 4);
    CHECK(plans[0].base_N == 24);
    CHECK(plans[0].target_Ns.size() == 11 + 22);
    CHECK(plans[0].target_Ns.front() == 23);
    CHECK(plans[0].target_Ns.back() == 46);
    CHECK(plans[3].via_sun_z);
    const int only30[] = {30};
    const auto p30 = extension_plans(only30);
    REQUIRE(p30.size() == 1);
    CHECK(p30[0].target_Ns == std::vector<int>{25, 26, 27, 28, 29, 30});
    const int only9[] = {9};
    const auto p9 = extension_plans(only9);
    REQUIRE(p9.size() == 2);
    CHECK(p9[0].target_Ns == std::vector<int>{23, 22, 21, 20, 19, 18});
  }

  TEST_CASE("h_all examples") {
    const auto zeros = [](u64 p) {
      const HarmonicTable t = h_all(p);
      std::vector<int> out;
      for (int N = 2; N <= 46; ++N) {
        if (t.at(N).residue == 0) out.push_back(N);
      }
      return out;
    };
    CHECK(zeros(137) == std::vector<int>{23, 24, 25, 26, 27});
    CHECK(zeros(761) == std::vector<int>{32, 33});
    CHECK(zeros(509) == std::vector<int>{40, 41, 42});
    CHECK_THROWS_AS(h_all(43), Error);
  }

  TEST_CASE("h_all agrees with the oracle for every N, 47 <= p < 2000") {
    for (u64 p : oracle::primes_between(47, 2000)) {
      const HarmonicTable t = h_all(p);
      for (int N = 2; N <= 46; ++N) {
        const HarmonicResidue& r = t.at(N);
        REQUIRE(r.m == p / static_cast<u64>(N));
        REQUIRE(r.residue == h_oracle(r.m, p));
      }
    }
  }

  TEST_CASE("h_all reciprocal budget") {
    for (u64 p : {47ull, 1009ull, 99991ull, 1000003ull}) {
      const HarmonicTable t = h_all(p);
      const u64 budget = (p / 13 - p / 24) + (p / 24 - p / 46) + (p / 7 - p / 8) + (p / 11 - p / 12);
      CHECK(t.reciprocals_requested <= budget);
    }
  }

  TEST_CASE("h_select handles small primes and subsets") {
    const int n9[] = {9};
    CHECK(h_select(19, n9).at(9).residue == 11);
    const int n7[] = {7};
    for (u64 p : oracle::primes_between(11, 200)) {
      REQUIRE(h_select(p, n7).at(7).residue == h_oracle(p / 7, p));
    }
    const int n30[] = {30};
    CHECK_THROWS_AS(h_select(29, n30), Error);
    const HarmonicTable t = h_select(1009, n30);
    CHECK(t.has(30));
    CHECK_FALSE(t.has(13));
    CHECK(t.reciprocals_requested == 1009 / 24 - 1009 / 30);
  }
}
