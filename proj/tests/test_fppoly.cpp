#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodred/fppoly.hpp"

using namespace goodred::fp;

TEST_CASE("arithmetic basics") {
    Fp k(7);
    Poly a{1, 2, 1};  // (x+1)^2
    Poly b{6, 1};     // x + 6 = x - 1
    auto [q, r] = divmod(k, a, b);
    CHECK(eval(k, a, 1) == 4);
    CHECK(r == Poly{eval(k, a, 1)}); // dividing by x - 1
    CHECK(add(k, a, scale(k, a, 6)).empty()); // a - a = 0
    CHECK(gcd(k, a, Poly{1, 1}) == Poly{1, 1});
}

TEST_CASE("factor fixed cases") {
    Fp k2(2);
    // x^2 + 1 = (x+1)^2 over F_2
    auto f1 = factor(k2, Poly{1, 0, 1});
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == Poly{1, 1});
    CHECK(f1[0].second == 2);

    Fp k3(3);
    // x^2 + 1 irreducible over F_3
    auto f2 = factor(k3, Poly{1, 0, 1});
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == Poly{1, 0, 1});
    CHECK(f2[0].second == 1);
    CHECK(is_irreducible(k3, Poly{1, 0, 1}));

    Fp k5(5);
    // x^2 + 1 = (x+2)(x+3) over F_5
    auto f3 = factor(k5, Poly{1, 0, 1});
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].first == Poly{2, 1});
    CHECK(f3[1].first == Poly{3, 1});

    // x^4 + 1 splits into two quadratics over F_3
    auto f4 = factor(k3, Poly{1, 0, 0, 0, 1});
    REQUIRE(f4.size() == 2);
    CHECK(degree(f4[0].first) == 2);
    CHECK(degree(f4[1].first) == 2);
}

TEST_CASE("frobenius ladder") {
    Fp k(3);
    Poly m{1, 0, 1}; // x^2+1 irreducible
    auto ladder = frobenius_powers(k, m, 2);
    CHECK(ladder[0] == Poly{0, 1});
    // x^9 = x mod (x^2+1) over F_3 since the field has 9 elements
    CHECK(ladder[2] == Poly{0, 1});
}

TEST_CASE("random recomposition and determinism") {
    std::mt19937_64 rng(101);
    for (uint64_t p : {2ull, 3ull, 5ull, 13ull, 31ull}) {
        Fp k(p);
        for (int iter = 0; iter < 60; ++iter) {
            int deg = 1 + int(rng() % 7);
            Poly f(deg + 1);
            for (int i = 0; i < deg; ++i)
                f[i] = rng() % p;
            f[deg] = 1 + rng() % (p - 1);
            f = trim(std::move(f));
            if (degree(f) < 1)
                continue;
            auto fs = factor(k, f);
            Poly prod = constant(f.back());
            for (const auto& [g, m] : fs) {
                CHECK(is_irreducible(k, g));
                CHECK(g.back() == 1);
                for (unsigned i = 0; i < m; ++i)
                    prod = mul(k, prod, g);
            }
            CHECK(prod == f);
            CHECK(factor(k, f) == fs); // deterministic
            unsigned total = 0;
            for (const auto& [g, m] : fs)
                total += m * degree(g);
            CHECK(total == unsigned(degree(f)));
        }
    }
}
