#ifndef GOODRED_ZFACTOR_HPP
#define GOODRED_ZFACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "goodred/sarith.hpp"

namespace goodred {

/* Univariate integer polynomials, little-endian coefficients. */
using ZPoly = std::vector<Int>;

int zdegree(const ZPoly& f); // zero polynomial -> -1
ZPoly ztrim(ZPoly f);
Int zcontent(const ZPoly& f); // nonnegative gcd of the coefficients
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zderiv(const ZPoly& f);
Int zeval(const ZPoly& f, const Int& x);

/* Exact quotient over Z, or nullopt when den does not divide num. */
std::optional<ZPoly> zdivide_exact(const ZPoly& num, const ZPoly& den);

/* Primitive gcd with positive leading coefficient (primitive PRS). */
ZPoly zgcd(ZPoly a, ZPoly b);

struct ZFactors {
    int sign = 1;
    Int content = 1; // positive
    /* primitive irreducible with positive leading coefficient,
     * sorted by degree then lexicographically */
    std::vector<std::pair<ZPoly, unsigned>> factors;
};

/* Complete factorization over Z via reduction mod a good prime, Hensel
 * lifting and subset recombination; intended for desk-scale degrees. */
ZFactors factor_z(const ZPoly& f);

} // namespace goodred

#endif
