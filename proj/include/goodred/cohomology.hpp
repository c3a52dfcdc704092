#ifndef GOODRED_COHOMOLOGY_HPP
#define GOODRED_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "goodred/zlinalg.hpp"

namespace goodred {

/*
 * A finite group given by its multiplication table; elements are the
 * indices 0..order-1.  The table is validated in full on construction,
 * so every instance really is a group.
 */
class FiniteGroup {
    int order_ = 1;
    int identity_ = 0;
    std::vector<int> mul_; // order x order, row major
    std::vector<int> inv_;

  public:
    explicit FiniteGroup(std::vector<std::vector<int>> table);
    FiniteGroup() : mul_{0}, inv_{0} {}

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n); // order 2n, rotations first
    static FiniteGroup direct_product(const FiniteGroup& a,
                                      const FiniteGroup& b);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int op(int a, int b) const { return mul_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    bool is_abelian() const;

    /* Smallest generating set, found by size then lexicographic order. */
    std::vector<int> generators() const;

    std::vector<std::vector<int>> table() const;
};

/* A G-group: a finite group A together with a G-action by automorphisms,
 * all tables validated on construction. */
class GGroup {
    FiniteGroup g_, a_;
    std::vector<int> action_; // |G| x |A|

  public:
    GGroup(FiniteGroup g, FiniteGroup a, std::vector<std::vector<int>> action);

    static GGroup trivial_action(const FiniteGroup& g, const FiniteGroup& a);
    /* G = Z/n acting on A = Z/m by x -> k·x (k^n ≡ 1 mod m). */
    static GGroup cyclic_on_cyclic(int n, int m, long k);

    const FiniteGroup& g() const { return g_; }
    const FiniteGroup& a() const { return a_; }
    int act(int s, int x) const { return action_[s * a_.order() + x]; }
};

/* A 1-cocycle is its value table G -> A; validity is checked against a
 * parent GGroup where needed. */
struct Cocycle {
    std::vector<int> values;

    static Cocycle trivial(const GGroup& m);
    friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

bool is_cocycle(const GGroup& m, const Cocycle& f);

/* The fixed subgroup A^G, sorted. */
std::vector<int> h0(const GGroup& m);

/* Exhaustive list of 1-cocycles, determined on a generating set and
 * validated on all of G; guarded by |A|^#generators ≤ 10^7. */
std::vector<Cocycle> cocycles(const GGroup& m);

/* A witness c with g(σ) = c^{-1}·f(σ)·σc for all σ, or nullopt. */
std::optional<int> cohomologous(const GGroup& m, const Cocycle& f,
                                const Cocycle& g);

/* H^1 as a pointed set: all cocycles plus their partition into classes;
 * the class of the principal cocycles comes first. */
struct H1Finite {
    std::vector<Cocycle> cocycles;
    std::vector<std::vector<std::size_t>> classes;

    std::size_t size() const { return classes.size(); }
};

H1Finite h1_finite(const GGroup& m);

/* Twist of the G-group structure of A by a cocycle valued in A itself:
 * σ*a = f(σ)·σa·f(σ)^{-1}.  Throws if the result fails the action laws
 * (which signals an invalid cocycle). */
GGroup twist(const GGroup& m, const Cocycle& f);

/*
 * A finite G-set with a compatible left B-action: σ(b·s) = σb·σs.  The
 * twist of the G-action by a cocycle in B is σ*s = f(σ)·σs.
 */
struct TwistableSet {
    GGroup b;                  // B as a G-group
    int size;                  // set elements 0..size-1
    std::vector<int> b_action; // |B| x size
    std::vector<int> g_action; // |G| x size

    TwistableSet(GGroup b_, std::vector<std::vector<int>> b_act,
                 std::vector<std::vector<int>> g_act);

    int bact(int b_elt, int s) const { return b_action[b_elt * size + s]; }
    int gact(int sigma, int s) const { return g_action[sigma * size + s]; }
};

/* The twisted G-action table σ*s = f(σ)·σs, validated. */
std::vector<std::vector<int>> twist_set(const TwistableSet& ts,
                                        const Cocycle& f);

std::vector<int> fixed_points(const TwistableSet& ts,
                              const std::vector<std::vector<int>>& g_action);

/* 1 → A --u--> B --v--> C → 1 of G-groups; all maps G-equivariant, u
 * injective, v surjective, ker v = im u (checked on construction). */
struct ShortExactSeq {
    GGroup a, b, c;
    std::vector<int> u; // |A| -> |B|
    std::vector<int> v; // |B| -> |C|

    ShortExactSeq(GGroup a_, GGroup b_, GGroup c_, std::vector<int> u_,
                  std::vector<int> v_);
};

/* Brute-force verification of the six-term exact sequence of pointed
 * sets attached to a short exact sequence of G-groups. */
struct SixTermReport {
    std::size_t h0a, h0b, h0c, h1a, h1b, h1c;
    std::size_t delta_image, u1_image, v1_kernel, cg_orbits;
    bool h0_row_exact;
    bool delta_exact_at_h0c;   // ker δ = im v^0
    bool exact_at_h1a;         // δ image = kernel of u^1
    bool fibers_are_cg_orbits; // nonempty fibers of u^1 = C^G-orbits
    bool kernel_v1_is_u1_image;

    bool passed() const {
        return h0_row_exact && delta_exact_at_h0c && exact_at_h1a &&
               fibers_are_cg_orbits && kernel_v1_is_u1_image;
    }
    std::string str() const;
};

SixTermReport six_term_check(const ShortExactSeq& s);

/* Verification of the twisted-fiber description: the fiber of v^1 over
 * v^1([f]) is the image of H^1(G, _f A) under the basepoint shift
 * g ↦ (σ ↦ u(g(σ))·f(σ)). */
struct TwistedFiberReport {
    std::size_t fiber_size, twisted_h1a, shifted_image;
    bool distinguished_maps_to_f;
    bool image_equals_fiber;

    bool passed() const { return distinguished_maps_to_f && image_equals_fiber; }
    std::string str() const;
};

TwistedFiberReport twisted_fiber_check(const ShortExactSeq& s,
                                       const Cocycle& f);

/* The explicit n-torsion witness from the finiteness lemma: checks
 * f(σ)^n = b^{-1}·σb with b = ∏_τ f(τ)^{-1}, n = |G|, A abelian. */
bool n_torsion_check(const GGroup& m, const Cocycle& f);

/* G acting on Z^r through integer matrices of determinant ±1. */
struct ZrModule {
    FiniteGroup g;
    int rank;
    std::vector<ZMat> rho; // one matrix per group element

    ZrModule(FiniteGroup g_, int rank_, std::vector<ZMat> rho_);
};

/* H^1(G, Z^r) = Z^1/B^1 by integer kernel and Smith normal form. */
struct H1ZrResult {
    std::vector<Int> divisors; // elementary divisors > 1; empty = trivial
    /* one representative cocycle per listed divisor, flattened |G|·rank */
    std::vector<std::vector<Int>> representatives;

    Int order() const;
};

H1ZrResult h1_zr(const ZrModule& m);

/* G acting on ⊕ Z/m_i through integer matrices (reduced mod the m_i).
 * The lattice route computes |H^1| through lattice indices only, with
 * no cocycle enumeration, so it can cross-check h1_finite. */
struct FiniteZModule {
    FiniteGroup g;
    std::vector<Int> moduli; // each ≥ 1
    std::vector<ZMat> rho;

    FiniteZModule(FiniteGroup g_, std::vector<Int> moduli_,
                  std::vector<ZMat> rho_);

    GGroup to_ggroup() const; // tables for the brute-force route
};

Int h1_order_lattice(const FiniteZModule& m);

} // namespace goodred

#endif
