#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodred/projective.hpp"

using namespace goodred;

namespace {

ProjPoint pt(long a, long b) { return {Int(a), Int(b)}; }

PointConfig cfg(std::initializer_list<std::pair<long, long>> ps) {
    std::vector<ProjPoint> v;
    for (auto [a, b] : ps)
        v.emplace_back(Int(a), Int(b));
    return PointConfig(std::move(v));
}

/* Random element of GL2(Z_S): product of shears, swaps and S-unit
 * scalings, so the determinant is an S-unit by construction. */
GL2ZS random_gl2(std::mt19937_64& rng, const SPrimeSet& s) {
    GL2ZS g = GL2ZS::identity(s);
    std::uniform_int_distribution<int> kind(0, 3), shear(-3, 3), pick(0, 1);
    int steps = 2 + int(rng() % 4);
    for (int i = 0; i < steps; ++i) {
        switch (kind(rng)) {
        case 0:
            g = g * GL2ZS(Rat(1), Rat(shear(rng)), Rat(0), Rat(1), s);
            break;
        case 1:
            g = g * GL2ZS(Rat(1), Rat(0), Rat(shear(rng)), Rat(1), s);
            break;
        case 2:
            g = g * GL2ZS(Rat(0), Rat(1), Rat(1), Rat(0), s);
            break;
        default: {
            Rat u(1);
            if (!s.empty()) {
                const Int& p = s.primes()[rng() % s.size()];
                u = pick(rng) ? Rat(p) : Rat(1, p);
            }
            if (pick(rng))
                u = -u;
            g = g * GL2ZS(u, Rat(0), Rat(0), Rat(1), s);
            break;
        }
        }
    }
    return g;
}

PointConfig random_config(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> coord(-20, 20);
    std::vector<ProjPoint> pts;
    while (pts.size() < n) {
        long a = coord(rng), b = coord(rng);
        if (a == 0 && b == 0)
            continue;
        ProjPoint p{Int(a), Int(b)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(p);
    }
    return PointConfig(std::move(pts));
}

} // namespace

TEST_CASE("normalization") {
    CHECK(pt(2, 4) == pt(1, 2));
    CHECK(pt(3, -6).str() == "-1:2");
    CHECK(pt(-5, 0).str() == "1:0");
    CHECK(pt(-5, 0).is_infinity());
    CHECK_THROWS_AS(ProjPoint(0, 0), std::domain_error);
    CHECK(ProjPoint::parse("6 : -4") == pt(-3, 2));
}

TEST_CASE("cross_det") {
    CHECK(cross_det(pt(1, 0), pt(0, 1)) == 1);
    CHECK(cross_det(pt(7, 3), pt(7, 3)) == 0);
    CHECK(cross_det(pt(1, 1), pt(-1, 1)) == 2);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (int i = 0; i < 200; ++i) {
        long a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
        if ((a == 0 && b == 0) || (c == 0 && d == 0))
            continue;
        ProjPoint p{Int(a), Int(b)}, q{Int(c), Int(d)};
        CHECK(cross_det(p, q) == -cross_det(q, p));
        CHECK((cross_det(p, q) == 0) == (p == q));
    }
}

TEST_CASE("reduce_point") {
    CHECK(reduce_point(pt(1, 2), 2) == ProjPointModP{2, 1, 0});
    CHECK(reduce_point(pt(1, 0), 7) == ProjPointModP{7, 1, 0});
    CHECK(reduce_point(pt(3, 5), 5) == ProjPointModP{5, 1, 0});
    CHECK(reduce_point(pt(2, 3), 3) == ProjPointModP{3, 1, 0});
    CHECK(reduce_point(pt(4, 6), 5).str() == "1:4 mod 5"); // [2:3] -> 3/2=4
    CHECK_THROWS_AS(reduce_point(pt(1, 1), 6), std::domain_error);
}

TEST_CASE("omega membership and colliding primes") {
    CHECK(omega_member(cfg({{1, 0}, {0, 1}}), SPrimeSet()));
    CHECK_FALSE(omega_member(cfg({{1, 1}, {-1, 1}}), SPrimeSet()));
    CHECK(omega_member(cfg({{1, 1}, {-1, 1}}), SPrimeSet::parse("2")));

    CHECK(colliding_primes(cfg({{1, 0}, {0, 1}})).empty());
    CHECK(colliding_primes(cfg({{1, 1}, {-1, 1}})) == std::set<Int>{2});
    CHECK(colliding_primes(cfg({{0, 1}, {1, 1}, {2, 1}})) == std::set<Int>{2});
}

TEST_CASE("colliding primes are exactly the reduction collisions") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        auto a = random_config(rng, 2 + rng() % 3);
        auto bad = colliding_primes(a);
        for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
            bool collided = false;
            std::vector<ProjPointModP> reduced;
            for (const auto& q : a) {
                auto r = reduce_point(q, p);
                for (const auto& other : reduced)
                    if (other == r)
                        collided = true;
                reduced.push_back(r);
            }
            CHECK(collided == bad.contains(p));
        }
    }
}

TEST_CASE("apply_gl2 basics") {
    auto s = SPrimeSet();
    auto id = GL2ZS::identity(s);
    auto a = cfg({{1, 0}, {0, 1}, {1, 1}});
    CHECK(apply_gl2(id, a) == a);

    GL2ZS swap(Rat(0), Rat(1), Rat(1), Rat(0), s);
    CHECK(apply_gl2(swap, cfg({{1, 0}, {0, 1}})) == cfg({{1, 0}, {0, 1}}));

    GL2ZS shear(Rat(1), Rat(1), Rat(0), Rat(1), s);
    CHECK(apply_gl2(shear, cfg({{0, 1}})) == cfg({{1, 1}}));

    CHECK_THROWS_AS(GL2ZS(Rat(2), Rat(0), Rat(0), Rat(1), SPrimeSet()),
                    std::domain_error);
    CHECK_THROWS_AS(GL2ZS(Rat(1, 2), Rat(0), Rat(0), Rat(1), SPrimeSet()),
                    std::domain_error);
    CHECK_THROWS_AS(
        GL2ZS(Rat(1), Rat(0), Rat(0), Rat(0), SPrimeSet::parse("2")),
        std::domain_error);
}

TEST_CASE("apply_gl2 preserves omega membership") {
    std::mt19937_64 rng(23);
    const SPrimeSet sets[] = {SPrimeSet(), SPrimeSet::parse("2"),
                              SPrimeSet::parse("2,3"),
                              SPrimeSet::parse("3,7")};
    for (int iter = 0; iter < 500; ++iter) {
        const SPrimeSet& s = sets[iter % 4];
        auto a = random_config(rng, 2 + rng() % 3);
        auto g = random_gl2(rng, s);
        CHECK(omega_member(a, s) == omega_member(apply_gl2(g, a), s));
    }
}

TEST_CASE("apply_gl2 is a left action") {
    std::mt19937_64 rng(29);
    auto s = SPrimeSet::parse("2,5");
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_config(rng, 1 + rng() % 4);
        auto g1 = random_gl2(rng, s), g2 = random_gl2(rng, s);
        CHECK(apply_gl2(g1, apply_gl2(g2, a)) == apply_gl2(g1 * g2, a));
        CHECK(apply_gl2(g1.inverse(), apply_gl2(g1, a)) == a);
    }
}

TEST_CASE("reduction commutes with the action") {
    std::mt19937_64 rng(31);
    auto s = SPrimeSet::parse("2,3");
    const Int ps[] = {5, 7, 11, 13};
    int done = 0;
    while (done < 200) {
        auto g = random_gl2(rng, s);
        auto a = random_config(rng, 1 + rng() % 3);
        for (const Int& p : ps) {
            bool integral_at_p = true;
            for (const Rat* e : {&g.m11(), &g.m12(), &g.m21(), &g.m22()})
                if (*e != 0 && valuation(*e, p) < 0)
                    integral_at_p = false;
            if (!integral_at_p)
                continue;
            for (const auto& q : a)
                CHECK(reduce_point(apply_gl2(g, q), p) ==
                      apply_gl2_mod_p(g, reduce_point(q, p)));
            ++done;
        }
    }
}

TEST_CASE("config parsing and validation") {
    auto a = PointConfig::parse("{1:0, 0:1, -2:3}");
    CHECK(a.size() == 3);
    CHECK(a.contains(pt(-2, 3)));
    CHECK(PointConfig::parse("1:0,0:1") == cfg({{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(PointConfig::parse("{1:0, 2:0}"), std::domain_error);
    CHECK_THROWS_AS(PointConfig::parse(""), std::domain_error);
    CHECK(a.str() == "{-2:3, 0:1, 1:0}");
}
