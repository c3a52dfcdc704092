#ifndef GOODRED_SARITH_HPP
#define GOODRED_SARITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goodred {

using Int = mpz_class;
using Rat = mpq_class;

/* Thrown when an exhaustive computation would exceed its documented size
 * guard. The CLI maps this to exit code 3. */
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * A finite set of rational primes S, kept sorted strictly ascending.
 * Defines the S-integers Z_S (denominators supported on S) and the
 * S-units ±∏_{p∈S} p^Z.
 */
class SPrimeSet {
    std::vector<Int> primes_;

  public:
    SPrimeSet() = default;
    explicit SPrimeSet(std::vector<Int> primes);

    /* "2,3,5"; the empty string is the empty set. */
    static SPrimeSet parse(const std::string& csv);

    const std::vector<Int>& primes() const { return primes_; }
    bool contains(const Int& p) const;
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    std::string str() const;

    bool operator==(const SPrimeSet&) const = default;
};

/* sign · ∏ p^e with p strictly increasing and every e ≥ 1. */
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned long>> factors;

    Int value() const;
};

/* Deterministic primality: trial division, then Miller–Rabin with a base
 * set proven complete below 3.3·10^24, then a fixed-round GMP check for
 * anything larger. */
bool is_prime(const Int& n);

Factorization factorize(const Int& n);

long valuation(const Int& n, const Int& p);
long valuation(const Rat& x, const Int& p);

bool is_s_unit(const Int& n, const SPrimeSet& s);
bool is_s_unit(const Rat& x, const SPrimeSet& s);

/* n = s_part · coprime_part with s_part > 0 supported on S and
 * coprime_part coprime to every p ∈ S. */
std::pair<Int, Int> s_part_split(const Int& n, const SPrimeSet& s);

/* den(x) supported on S, i.e. x ∈ Z_S. */
bool is_s_integer(const Rat& x, const SPrimeSet& s);

} // namespace goodred

#endif
