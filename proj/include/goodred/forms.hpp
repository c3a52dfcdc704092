#ifndef GOODRED_FORMS_HPP
#define GOODRED_FORMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goodred/projective.hpp"
#include "goodred/sarith.hpp"
#include "goodred/zfactor.hpp"

namespace goodred {

/*
 * A binary n-ic form f(x,y) = Σ a_i x^i y^(n-i) with integer
 * coefficients, stored highest x-power first: coeffs() = (a_n, ..., a_0).
 * Forms over Z_S enter after clearing denominators by an S-unit.
 */
class BinaryForm {
    int n_;
    std::vector<Int> c_; // c_[k] = a_(n-k)

  public:
    BinaryForm(int degree, std::vector<Int> coeffs);
    static BinaryForm parse(const std::string& text); // "[a_n, ..., a_0]"

    int degree() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }
    /* a_i, the coefficient of x^i y^(n-i) */
    const Int& coeff(int i) const { return c_[n_ - i]; }

    Int content() const;
    /* f(x, 1) little-endian; the degree drops when a_n = 0 */
    ZPoly dehomogenize() const;

    std::string str() const;    // "[a_n, ..., a_0]"
    std::string pretty() const; // "x^2 - y^2"

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
    friend bool operator<(const BinaryForm& f, const BinaryForm& g);
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

/* Raised by roots_config when the form does not split over Q; carries the
 * degrees of the Q-irreducible factors (counting the point at infinity as
 * a linear factor). */
class non_split_error : public std::domain_error {
    std::vector<int> degrees_;

  public:
    explicit non_split_error(std::vector<int> degrees);
    const std::vector<int>& degrees() const { return degrees_; }
};

/*
 * Discriminant of a binary form, normalized so n = 2 gives b^2 - 4ac and
 * n = 3 gives 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2; for general n
 * it is computed from the Sylvester resultant of the two partials and
 * agrees exactly with a_n^(2n-2) ∏ (α_i β_j - α_j β_i)^2.  Vanishes iff
 * the form has a repeated root over the algebraic closure.
 */
Int discriminant(const BinaryForm& f);

/* γ·f(x,y) = f((x,y)γ), exact rational coefficients (a_n..a_0). */
std::vector<Rat> act_rational(const GL2ZS& g, const BinaryForm& f);

/* γ·f with denominators cleared by the least positive S-supported
 * integer; equals γ·f itself whenever γ is integral. */
BinaryForm act(const GL2ZS& g, const BinaryForm& f);

/*
 * The root map R: the n points [α_i : β_i] of a squarefree form that
 * splits over Q, including [1:0] when the degree drops.  Repeated roots
 * raise std::domain_error, non-split forms raise non_split_error.
 */
PointConfig roots_config(const BinaryForm& f);

/* The dictionary map φ: ∏ (b_i x - a_i y) over the normalized coprime
 * coordinates, canonically rescaled; splits with roots_config∘φ = id. */
BinaryForm config_to_form(const PointConfig& config);

/* Divide out the S-part of the content and make the leading nonzero
 * coefficient positive: a deterministic representative modulo S-units. */
BinaryForm canonical_unit_scaling(const BinaryForm& f, const SPrimeSet& s);

/* A form with canonical representative, i.e. a point of V_n(Z_S) modulo
 * S-unit scaling. */
struct FormClass {
    BinaryForm representative;
    SPrimeSet s;

    FormClass(const BinaryForm& f, SPrimeSet s_)
        : representative(canonical_unit_scaling(f, s_)), s(std::move(s_)) {}
    friend bool operator==(const FormClass& a, const FormClass& b) {
        return a.representative == b.representative;
    }
};

/* Membership test for the form side of Ω: Δ(f) a nonzero S-unit and
 * content an S-unit. */
bool is_omega_form(const BinaryForm& f, const SPrimeSet& s);

/* Reduction of the closed point cut out by f at p: the factor pattern of
 * f mod p after removing p-content, with the factor y accounting for the
 * degree drop at infinity.  Multiplicities sum to n. */
struct FactorPatternModP {
    struct Factor {
        std::vector<Int> coeffs; // b_d, ..., b_0 over F_p, x-power descending
        unsigned multiplicity;

        int degree() const { return static_cast<int>(coeffs.size()) - 1; }
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Int p;
    std::vector<Factor> factors;

    unsigned total_degree() const;
    std::string str() const;
};

FactorPatternModP reduce_form_mod_p(const BinaryForm& f, const Int& p);

/* A (Q,S)-equivalence witness: act(gamma, f) = lambda * g exactly. */
struct EquivWitness {
    GL2ZS gamma;
    Rat lambda;
};

/*
 * Bounded search for a witness γ·f = λg with entry and λ heights at most
 * `bound`; nullopt means "not found within the bound", except when the
 * discriminant invariant rules equivalence out entirely.
 */
std::optional<EquivWitness> equivalent(const BinaryForm& f,
                                       const BinaryForm& g,
                                       const SPrimeSet& s, unsigned bound);

/*
 * Canonical SL2(Z) representative of a nondegenerate binary quadratic:
 * Gauss-reduced for negative discriminant, the lexicographically least
 * form on the reduction cycle for positive non-square discriminant and
 * (a mod k, k, 0) for discriminant k^2.
 */
BinaryForm gauss_reduce_quadratic(const BinaryForm& f);

/* All degree-n forms with |coeffs| ≤ height, content an S-unit and Δ a
 * nonzero S-unit, deduplicated by canonical scaling, lexicographic. */
std::vector<BinaryForm> enumerate_omega_forms(int degree, const SPrimeSet& s,
                                              long height);

/* Partition of the input list into (Q,S)-equivalence classes found by
 * the bounded search, Gauss-reduction buckets accelerating n = 2.
 * Returns index lists, each sorted, ordered by first element. */
std::vector<std::vector<std::size_t>>
orbit_partition(const std::vector<BinaryForm>& forms, const SPrimeSet& s,
                unsigned bound);

/* Fundamental discriminant of the quadratic field cut out by an
 * irreducible binary quadratic. */
Int field_disc_quadratic(const BinaryForm& q);

} // namespace goodred

#endif
