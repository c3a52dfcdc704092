#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodred/sarith.hpp"

using namespace goodred;

TEST_CASE("factorize small cases") {
    auto f = factorize(12);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned long>{2, 2});
    CHECK(f.factors[1] == std::pair<Int, unsigned long>{3, 1});

    auto u = factorize(-1);
    CHECK(u.sign == -1);
    CHECK(u.factors.empty());
    CHECK(u.value() == -1);

    auto g = factorize(21504); // 2^10 * 3 * 7
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0] == std::pair<Int, unsigned long>{2, 10});
    CHECK(g.factors[1] == std::pair<Int, unsigned long>{3, 1});
    CHECK(g.factors[2] == std::pair<Int, unsigned long>{7, 1});
    CHECK(g.value() == 21504);

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize handles semiprimes and powers beyond the trial bound") {
    Int p("1000003"), q("1000033");
    auto f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[1].first == q);

    auto g = factorize(p * p * p);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == std::pair<Int, unsigned long>{p, 3});

    // 128-bit-ish desk-scale input: 2^101 * 3
    Int big = (Int(1) << 101) * 3;
    auto h = factorize(big);
    CHECK(h.value() == big);
}

TEST_CASE("factorize recomposes on random inputs") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> dist(-1000000000000LL,
                                                  1000000000000LL);
    int done = 0;
    while (done < 10000) {
        long long v = dist(rng);
        if (v == 0)
            continue;
        Int n(std::to_string(v));
        auto f = factorize(n);
        REQUIRE(f.value() == n);
        for (const auto& [p, e] : f.factors) {
            CHECK(e >= 1);
            CHECK(is_prime(p));
        }
        ++done;
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(Int(8), 2) == 3);
    CHECK(valuation(Rat(3, 4), 2) == -2);
    CHECK(valuation(Int(1), 5) == 0);
    CHECK_THROWS_AS(valuation(Int(0), 3), std::domain_error);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    const Int primes[] = {2, 3, 5, 13};
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng);
        if (!a || !b)
            continue;
        Int ab = Int(a) * Int(b);
        for (const Int& p : primes)
            CHECK(valuation(ab, p) ==
                  valuation(Int(a), p) + valuation(Int(b), p));
    }
}

TEST_CASE("is_s_unit") {
    SPrimeSet empty;
    CHECK(is_s_unit(Int(-1), empty));
    CHECK(is_s_unit(Int(12), SPrimeSet::parse("2,3")));
    CHECK_FALSE(is_s_unit(Int(12), SPrimeSet::parse("2")));
    CHECK(is_s_unit(Rat(4, 9), SPrimeSet::parse("2,3")));
    CHECK_FALSE(is_s_unit(Rat(4, 9), SPrimeSet::parse("2")));
    CHECK_THROWS_AS(is_s_unit(Int(0), empty), std::domain_error);

    // multiplicativity
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    auto s = SPrimeSet::parse("2,7");
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng);
        if (!a || !b)
            continue;
        Int ab = Int(a) * Int(b);
        CHECK(is_s_unit(ab, s) ==
              (is_s_unit(Int(a), s) && is_s_unit(Int(b), s)));
    }
}

TEST_CASE("s_part_split") {
    auto [s1, c1] = s_part_split(24, SPrimeSet::parse("2"));
    CHECK(s1 == 8);
    CHECK(c1 == 3);
    auto [s2, c2] = s_part_split(7, SPrimeSet::parse("2,3"));
    CHECK(s2 == 1);
    CHECK(c2 == 7);
    auto [s3, c3] = s_part_split(-360, SPrimeSet::parse("2,5"));
    CHECK(s3 == 40);
    CHECK(c3 == -9);
    CHECK_THROWS_AS(s_part_split(0, SPrimeSet()), std::domain_error);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    auto s = SPrimeSet::parse("2,3,11");
    for (int i = 0; i < 1000; ++i) {
        long v = dist(rng);
        if (!v)
            continue;
        auto [sp, cp] = s_part_split(Int(v), s);
        CHECK(sp * cp == v);
        CHECK(sp > 0);
        for (const Int& p : s.primes()) {
            CHECK(!mpz_divisible_p(cp.get_mpz_t(), p.get_mpz_t()));
        }
        CHECK(is_s_unit(sp, s));
    }
}

TEST_CASE("SPrimeSet validation and parsing") {
    CHECK_THROWS_AS(SPrimeSet({Int(4)}), std::domain_error);
    CHECK_THROWS_AS(SPrimeSet::parse("2,9"), std::domain_error);
    auto s = SPrimeSet::parse("5, 2, 3, 2");
    REQUIRE(s.size() == 3);
    CHECK(s.primes()[0] == 2);
    CHECK(s.primes()[2] == 5);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(7));
    CHECK(SPrimeSet::parse("").empty());
    CHECK(s.str() == "{2,3,5}");
}

TEST_CASE("is_prime on edge cases") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(-3));
    CHECK(is_prime(2));
    CHECK(is_prime(Int("1000003")));
    // Carmichael number
    CHECK_FALSE(is_prime(561));
    // strong pseudoprime to base 2
    CHECK_FALSE(is_prime(2047));
    CHECK(is_prime(Int("170141183460469231731687303715884105727"))); // 2^127-1
}
