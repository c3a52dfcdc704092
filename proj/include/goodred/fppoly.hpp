#ifndef GOODRED_FPPOLY_HPP
#define GOODRED_FPPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace goodred::fp {

/*
 * Univariate polynomials over F_p for word-sized p, coefficients stored
 * little-endian (c[0] is the constant term) with no trailing zeros.
 * Everything here is deterministic: the equal-degree splitter sweeps
 * test polynomials in a fixed order instead of sampling.
 */
using Poly = std::vector<uint64_t>;

struct Fp {
    uint64_t p;

    explicit Fp(uint64_t prime);

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    uint64_t neg(uint64_t a) const { return a % p == 0 ? 0 : p - a % p; }
};

int degree(const Poly& f); // deg 0 polynomial -> 0; zero polynomial -> -1
Poly trim(Poly f);
bool is_zero(const Poly& f);
Poly constant(uint64_t c);

Poly add(const Fp& k, const Poly& a, const Poly& b);
Poly sub(const Fp& k, const Poly& a, const Poly& b);
Poly mul(const Fp& k, const Poly& a, const Poly& b);
Poly scale(const Fp& k, const Poly& a, uint64_t c);
std::pair<Poly, Poly> divmod(const Fp& k, const Poly& num, const Poly& den);
Poly mod(const Fp& k, const Poly& num, const Poly& den);
Poly make_monic(const Fp& k, const Poly& f);
Poly gcd(const Fp& k, Poly a, Poly b); // monic
Poly deriv(const Fp& k, const Poly& f);
Poly powmod(const Fp& k, Poly base, uint64_t e, const Poly& m);
uint64_t eval(const Fp& k, const Poly& f, uint64_t x);

/* x^(p^i) mod m for i = 0..cap, the Frobenius ladder. */
std::vector<Poly> frobenius_powers(const Fp& k, const Poly& m, int cap);

/* (irreducible monic factor, multiplicity), factors sorted by degree then
 * lexicographically by coefficient vector. */
std::vector<std::pair<Poly, unsigned>> factor(const Fp& k, const Poly& f);

bool is_irreducible(const Fp& k, const Poly& f);

} // namespace goodred::fp

#endif
