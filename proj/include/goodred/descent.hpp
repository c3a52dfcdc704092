#ifndef GOODRED_DESCENT_HPP
#define GOODRED_DESCENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "goodred/cohomology.hpp"

namespace goodred {

/*
 * F_{p^k} with a fixed tabulated irreducible modulus, so every output is
 * bit-reproducible.  Elements are indices 0..p^k-1 whose base-p digits
 * are the polynomial coefficients; the prime field sits at indices < p.
 * The arithmetic Galois group of the model is <frob>, frob(x) = x^p.
 */
class FqField {
    uint32_t p_, k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_; // little-endian, monic degree k
    std::vector<uint32_t> mul_table_;
    std::vector<uint32_t> inv_table_, frob_table_;

  public:
    FqField(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t q() const { return q_; } // p^k
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const { return sub(0, a); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return mul_table_[a * q_ + b];
    }
    uint32_t inv(uint32_t a) const;
    uint32_t frob(uint32_t a) const { return frob_table_[a]; } // a^p
    bool in_base(uint32_t a) const { return frob(a) == a; }

    std::string elem_str(uint32_t a) const; // "t+1"
};

/*
 * P^1(F_q^k) with q^k + 1 points: index i < q^k is [1 : elem_i], index
 * q^k is [0 : 1] (first nonzero coordinate normalized to 1).
 */
uint32_t p1_size(const FqField& f); // q^k + 1
uint32_t p1_frob(const FqField& f, uint32_t pt);

/* An element of PGL_2(F_{q^k}): the coset representative scaled so the
 * first nonzero entry in row-major order is 1. */
struct Mat2Fq {
    std::array<uint32_t, 4> m{1, 0, 0, 1};

    friend auto operator<=>(const Mat2Fq&, const Mat2Fq&) = default;
};

Mat2Fq pgl2_make(const FqField& f, uint32_t a, uint32_t b, uint32_t c,
                 uint32_t d); // normalizes; throws when det = 0
Mat2Fq pgl2_mul(const FqField& f, const Mat2Fq& a, const Mat2Fq& b);
Mat2Fq pgl2_inv(const FqField& f, const Mat2Fq& a);
Mat2Fq pgl2_frob(const FqField& f, const Mat2Fq& a); // entrywise x^p
bool pgl2_in_base(const FqField& f, const Mat2Fq& a);
uint32_t pgl2_apply(const FqField& f, const Mat2Fq& a, uint32_t pt);
std::string pgl2_str(const FqField& f, const Mat2Fq& a);

/* Every element, deterministically ordered; guarded at 10^7. */
std::vector<Mat2Fq> pgl2_elements(const FqField& f);
/* The subgroup PGL_2(F_p) of Frobenius-fixed elements. */
std::vector<Mat2Fq> pgl2_base_elements(const FqField& f);

/* A Frobenius-stable n-element subset of P^1(F_{q^k}). */
struct FqConfig {
    std::vector<uint32_t> points; // sorted, distinct

    std::size_t n() const { return points.size(); }
    friend auto operator<=>(const FqConfig&, const FqConfig&) = default;
};

bool frobenius_stable(const FqField& f, const FqConfig& c);
FqConfig apply_config(const FqField& f, const Mat2Fq& g, const FqConfig& c);
std::string config_str(const FqField& f, const FqConfig& c);

/* All Frobenius-stable n-subsets, enumerated through unions of
 * Frobenius point-orbits; guarded by C(q^k+1, n) ≤ 10^7. */
std::vector<FqConfig> frobenius_orbits(const FqField& f, int n);

/* M_A = {F in PGL2 : F(A) = A} by exhaustive scan, with its Galois
 * structure: Frobenius acts by entrywise conjugation. */
struct StabilizerGroup {
    FqConfig config;
    std::vector<Mat2Fq> elements; // sorted

    std::size_t order() const { return elements.size(); }
    int index_of(const Mat2Fq& m) const;
};

StabilizerGroup stabilizer(const FqField& f, const FqConfig& a);

/* M_A as a G-group for G = Gal = Z/k, suitable for the cohomology
 * machinery; element i of the FiniteGroup is elements[i]. */
GGroup stabilizer_ggroup(const FqField& f, const StabilizerGroup& stab);

/* ψ_{B,F}: σ^j ↦ F^{-1}·σ^j(F), a validated cocycle valued in M_A;
 * requires B = F·A exactly. */
Cocycle psi_cocycle(const FqField& f, const StabilizerGroup& stab,
                    const FqConfig& a, const FqConfig& b, const Mat2Fq& w);

/*
 * The full descent experiment at (n, p, k): decompose the stable
 * configurations into PGL2(F_{p^k})-orbits, compute the PGL2(F_p)-orbit
 * decomposition inside each, attach ψ-classes in H^1(Gal, M_A), and
 * verify well-definedness, base-invariance, injectivity with explicit
 * witnesses, and the fiber-count bookkeeping.
 */
struct OrbitFiberReport {
    struct Member {
        FqConfig config;
        int base_orbit;
        std::size_t psi_class;
        Mat2Fq witness; // F with config = F·representative
    };
    struct Orbit {
        FqConfig representative;
        std::size_t stable_in_orbit;
        std::size_t stabilizer_order;
        std::size_t h1_size;
        std::size_t base_orbits; // fiber size over this orbit
        std::size_t distinct_psi_classes;
        bool psi_well_defined;
        bool base_invariance;
        bool injective;
        std::vector<Member> members;
    };

    uint32_t n, p, k;
    std::size_t stable_count;
    std::size_t base_orbit_count;
    std::vector<Orbit> orbits;
    bool partition_consistent;

    bool all_ok() const;
    std::string str() const;
};

OrbitFiberReport orbit_fiber_report(const FqField& f, int n);

/* Model-specific consistency check (not a claim from the descent
 * theory itself): H^1(<frob>, PGL2(F_{p^k})) is trivial, so the ψ fiber
 * analysis sees every class. */
bool h1_pgl2_check(const FqField& f);

} // namespace goodred

#endif
