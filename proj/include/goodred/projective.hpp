#ifndef GOODRED_PROJECTIVE_HPP
#define GOODRED_PROJECTIVE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "goodred/sarith.hpp"

namespace goodred {

/*
 * A point [a : b] of P^1(Q) in lowest terms with a fixed sign rule:
 * gcd(a,b) = 1 and b > 0, or b = 0 and a = 1.  Normalization is the
 * single source of truth for equality and hashing.
 */
class ProjPoint {
    Int a_, b_;

  public:
    ProjPoint(const Int& a, const Int& b);

    static ProjPoint infinity() { return {1, 0}; }
    static ProjPoint parse(const std::string& text); // "a:b"

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    bool is_infinity() const { return b_ == 0; }

    std::string str() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& p,
                                            const ProjPoint& q) {
        if (int c = cmp(p.a_, q.a_); c != 0)
            return c <=> 0;
        return cmp(p.b_, q.b_) <=> 0;
    }
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

/* αβ' − α'β for the normalized representatives; 0 iff the points agree.
 * Its prime divisors are exactly the primes where the two reductions
 * collide. */
Int cross_det(const ProjPoint& p, const ProjPoint& q);

/* An n-element subset of P^1(Q), stored sorted. */
class PointConfig {
    std::vector<ProjPoint> pts_;

  public:
    explicit PointConfig(std::vector<ProjPoint> pts);
    static PointConfig parse(const std::string& text); // "{a:b, c:d}" or CSV

    std::size_t size() const { return pts_.size(); }
    const std::vector<ProjPoint>& points() const { return pts_; }
    bool contains(const ProjPoint& p) const;
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    std::string str() const;

    friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

std::ostream& operator<<(std::ostream& os, const PointConfig& c);

/* A point of P^1(F_p); the first nonzero coordinate from the left is 1. */
struct ProjPointModP {
    Int p;
    Int a, b;

    std::string str() const;
    friend bool operator==(const ProjPointModP&, const ProjPointModP&) =
        default;
};

/* Coordinate-wise reduction; well defined because gcd(a,b) = 1. */
ProjPointModP reduce_point(const ProjPoint& pt, const Int& p);

/*
 * An element of GL_2(Z_S): rational entries with S-supported denominators
 * and S-unit determinant.  Scalars act trivially on points, so these
 * matrices double as representatives of PGL_2(Z_S).
 */
class GL2ZS {
    Rat m11_, m12_, m21_, m22_;
    SPrimeSet s_;

  public:
    GL2ZS(const Rat& m11, const Rat& m12, const Rat& m21, const Rat& m22,
          SPrimeSet s);

    static GL2ZS identity(SPrimeSet s = {});

    const Rat& m11() const { return m11_; }
    const Rat& m12() const { return m12_; }
    const Rat& m21() const { return m21_; }
    const Rat& m22() const { return m22_; }
    const SPrimeSet& s() const { return s_; }

    Rat det() const;
    GL2ZS inverse() const;
    GL2ZS transpose() const;
    /* adj(γ)^T = det(γ)·(γ^{-1})^T; the induced point action is the
     * contragredient one. */
    GL2ZS contragredient() const;
    bool is_integral() const;

    GL2ZS operator*(const GL2ZS& rhs) const;

    std::string str() const;
};

/* Fractional-linear action on column vectors: [a:b] ↦ [m11·a + m12·b :
 * m21·a + m22·b], denominators cleared, renormalized. */
ProjPoint apply_gl2(const GL2ZS& g, const ProjPoint& p);
PointConfig apply_gl2(const GL2ZS& g, const PointConfig& c);

/* The same action on P^1(F_p) for matrices that are p-integral with
 * p-unit determinant. */
ProjPointModP apply_gl2_mod_p(const GL2ZS& g, const ProjPointModP& pt);

/* True iff #r_p(A) = n for every prime p outside S; decided exactly via
 * pairwise cross-determinants. */
bool omega_member(const PointConfig& config, const SPrimeSet& s);

/* The finite set of primes where the configuration degenerates, i.e.
 * the union of the prime divisors of the pairwise cross-determinants. */
std::set<Int> colliding_primes(const PointConfig& config);

} // namespace goodred

#endif
