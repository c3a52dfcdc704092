#include "goodred/sarith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace goodred {

namespace {

const unsigned long kTrialBound = 1000000;

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> table = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i])
                continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= kTrialBound; j += i)
                sieve[j] = false;
        }
        return ps;
    }();
    return table;
}

/* Complete Miller-Rabin base set for n < 3317044064679887385961981
 * (Sorenson-Webster). */
const unsigned long kMrBases[] = {2,  3,  5,  7,  11, 13, 17,
                                  19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Int& n, const Int& base) {
    // n odd, n > 3.  Returns true when `base` proves n composite.
    Int nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Int d = nm1 >> s;
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == nm1)
            return false;
    }
    return true;
}

/* Brent's cycle variant of Pollard rho with a deterministic parameter
 * sweep; n must be odd, composite and not a perfect power. */
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i)
                y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(m), Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        // cycle degenerated for this c; try the next increment
    }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned long> sub;
                factor_into(root, sub);
                for (const auto& [p, e] : sub)
                    out[p] += e * k;
                return;
            }
        }
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

SPrimeSet::SPrimeSet(std::vector<Int> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Int& p : primes)
        if (!is_prime(p))
            throw std::domain_error("SPrimeSet: " + p.get_str() +
                                    " is not prime");
    primes_ = std::move(primes);
}

SPrimeSet SPrimeSet::parse(const std::string& csv) {
    std::vector<Int> ps;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(),
                                 [](char ch) { return ch == ' '; }),
                  tok.end());
        if (tok.empty())
            continue;
        ps.emplace_back(tok);
    }
    return SPrimeSet(std::move(ps));
}

bool SPrimeSet::contains(const Int& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string SPrimeSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i)
            out += ",";
        out += primes_[i].get_str();
    }
    return out + "}";
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul,
                            23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return n == p;
    if (n < 47 * 47)
        return true;
    static const Int kMrComplete("3317044064679887385961981");
    if (n < kMrComplete) {
        for (unsigned long b : kMrBases)
            if (miller_rabin_witness(n, Int(b)))
                return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factorize(const Int& n) {
    if (n == 0)
        throw std::domain_error("factorize: zero input");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);

    std::map<Int, unsigned long> acc;
    if (m.fits_ulong_p()) {
        uint64_t v = m.get_ui();
        for (uint32_t p : small_primes()) {
            if (uint64_t(p) * p > v)
                break;
            if (v % p)
                continue;
            unsigned long e = 0;
            do {
                v /= p;
                ++e;
            } while (v % p == 0);
            acc[Int(p)] = e;
        }
        // leftover is prime whenever the loop stopped with p^2 > v; the
        // composite > 10^12 case falls through to factor_into below
        mpz_set_ui(m.get_mpz_t(), static_cast<unsigned long>(v));
    } else {
        for (uint32_t p : small_primes()) {
            if (!mpz_divisible_ui_p(m.get_mpz_t(), p))
                continue;
            unsigned long e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            acc[Int(p)] = e;
            if (m == 1 || m.fits_ulong_p())
                break;
        }
        if (m != 1 && m.fits_ulong_p()) {
            // dropped into native range; reuse the fast path
            Factorization tail = factorize(m);
            for (const auto& [p, e] : tail.factors)
                acc[p] += e;
            m = 1;
        }
    }
    if (m > 1)
        factor_into(m, acc);

    f.factors.assign(acc.begin(), acc.end());
    return f;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0)
        throw std::domain_error("valuation: zero input");
    Int rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0)
        throw std::domain_error("valuation: zero input");
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

std::pair<Int, Int> s_part_split(const Int& n, const SPrimeSet& s) {
    if (n == 0)
        throw std::domain_error("s_part_split: zero input");
    Int s_part = 1, rest = n;
    for (const Int& p : s.primes()) {
        Int reduced;
        unsigned long e =
            mpz_remove(reduced.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (e) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            s_part *= pe;
            rest = reduced;
        }
    }
    return {s_part, rest};
}

bool is_s_unit(const Int& n, const SPrimeSet& s) {
    if (n == 0)
        throw std::domain_error("is_s_unit: zero input");
    return abs(s_part_split(n, s).second) == 1;
}

bool is_s_unit(const Rat& x, const SPrimeSet& s) {
    if (x == 0)
        throw std::domain_error("is_s_unit: zero input");
    return is_s_unit(Int(x.get_num()), s) && is_s_unit(Int(x.get_den()), s);
}

bool is_s_integer(const Rat& x, const SPrimeSet& s) {
    if (x == 0)
        return true;
    return is_s_unit(Int(x.get_den()), s);
}

} // namespace goodred
