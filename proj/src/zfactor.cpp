#include "goodred/zfactor.hpp"

#include <algorithm>
#include <functional>

#include "goodred/fppoly.hpp"

namespace goodred {

namespace {

ZPoly zscale(const ZPoly& f, const Int& c) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = f[i] * c;
    return r;
}

/* Euclidean-style division tracking rational coefficients is avoided by
 * requiring den's leading coefficient to divide exactly at every step;
 * that characterizes exact divisibility over Z for primitive inputs only
 * when it succeeds, so a final remainder check still runs. */
std::optional<ZPoly> divide_exact_impl(ZPoly num, const ZPoly& den) {
    int dn = zdegree(num), dd = zdegree(den);
    if (dd < 0)
        return std::nullopt;
    if (dn < dd)
        return std::nullopt;
    ZPoly q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        const Int& top = num[i];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), den[dd].get_mpz_t()))
            return std::nullopt;
        Int c = top / den[dd];
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0)
            return std::nullopt;
    return ztrim(std::move(q));
}

/* Symmetric representative in (-m/2, m/2]. */
Int smod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    if (2 * r > m)
        r -= m;
    return r;
}

struct ModCtx {
    Int pk; // p^k

    ZPoly reduce(ZPoly f) const {
        for (Int& c : f) {
            c %= pk;
            if (c < 0)
                c += pk;
        }
        return ztrim(std::move(f));
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        return reduce(zmul(a, b));
    }
    /* remainder of num by monic den, coefficients mod pk */
    ZPoly rem_monic(ZPoly num, const ZPoly& den) const {
        num = reduce(std::move(num));
        int dd = zdegree(den);
        while (zdegree(num) >= dd) {
            Int c = num.back();
            int shift = zdegree(num) - dd;
            for (int j = 0; j <= dd; ++j) {
                num[shift + j] -= c * den[j];
            }
            num = reduce(std::move(num));
        }
        return num;
    }
};

fp::Poly to_fp(const fp::Fp& k, const ZPoly& f) {
    fp::Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % Int(static_cast<unsigned long>(k.p));
        if (c < 0)
            c += Int(static_cast<unsigned long>(k.p));
        r[i] = c.get_ui();
    }
    return fp::trim(std::move(r));
}

ZPoly from_fp(const fp::Poly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = Int(static_cast<unsigned long>(f[i]));
    return r;
}

/* s·u + t·v = 1 in F_p[x] for coprime u, v. */
std::pair<fp::Poly, fp::Poly> bezout(const fp::Fp& k, const fp::Poly& u,
                                     const fp::Poly& v) {
    fp::Poly r0 = u, r1 = v;
    fp::Poly s0 = fp::constant(1), s1 = {};
    fp::Poly t0 = {}, t1 = fp::constant(1);
    while (!fp::is_zero(r1)) {
        auto [q, r] = fp::divmod(k, r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, fp::sub(k, s0, fp::mul(k, q, s1)));
        t0 = std::exchange(t1, fp::sub(k, t0, fp::mul(k, q, t1)));
    }
    // r0 is a nonzero constant
    uint64_t inv = k.inv(r0[0]);
    return {fp::scale(k, s0, inv), fp::scale(k, t0, inv)};
}

/* Linear Hensel lift of C ≡ u·v (mod p) to modulus p^steps; C, u, v
 * monic, u, v coprime mod p. */
void hensel_pair(const ZPoly& c, ZPoly& u, ZPoly& v, const Int& p,
                 unsigned steps) {
    fp::Fp k(p.get_ui());
    auto [s, t] = bezout(k, to_fp(k, u), to_fp(k, v));
    ZPoly zs = from_fp(s), zt = from_fp(t);
    Int pj = p;
    for (unsigned j = 1; j < steps; ++j) {
        ModCtx big{pj * p};
        // e = (c - u*v)/p^j  (exact), taken mod p
        ZPoly diff = zadd(c, zscale(zmul(u, v), -1));
        ZPoly e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i)
            e[i] = diff[i] / pj;
        fp::Fp kp(p.get_ui());
        fp::Poly ebar = to_fp(kp, e);
        // du = t*e mod u, dv = s*e mod v (all mod p)
        fp::Poly du = fp::mod(kp, fp::mul(kp, t, ebar), to_fp(kp, u));
        fp::Poly dv = fp::mod(kp, fp::mul(kp, s, ebar), to_fp(kp, v));
        ZPoly zdu = zscale(from_fp(du), pj), zdv = zscale(from_fp(dv), pj);
        u = big.reduce(zadd(u, zdu));
        v = big.reduce(zadd(v, zdv));
        // keep symmetric-free monic shape: lifts preserve the leading 1
        pj *= p;
    }
}

/* Lift the full modular factorization of monic c to modulus p^steps by
 * peeling factors one at a time. */
std::vector<ZPoly> hensel_lift(const ZPoly& c, std::vector<fp::Poly> bars,
                               const Int& p, unsigned steps) {
    std::vector<ZPoly> lifted;
    fp::Fp k(p.get_ui());
    ZPoly rest = c;
    while (bars.size() > 1) {
        fp::Poly vbar = fp::constant(1);
        for (size_t i = 1; i < bars.size(); ++i)
            vbar = fp::mul(k, vbar, bars[i]);
        ZPoly u = from_fp(bars[0]), v = from_fp(vbar);
        hensel_pair(rest, u, v, p, steps);
        lifted.push_back(std::move(u));
        rest = std::move(v);
        bars.erase(bars.begin());
    }
    lifted.push_back(std::move(rest));
    return lifted;
}

/* Coefficient bound for monic factors of monic m (Landau-Mignotte). */
Int factor_bound(const ZPoly& m) {
    Int norm2_sq = 0;
    for (const Int& c : m)
        norm2_sq += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2_sq.get_mpz_t());
    Int b = (root + 1);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), zdegree(m) + 1);
    return b;
}

/* All factors here are monic; returns the monic irreducible factors. */
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& m) {
    int n = zdegree(m);
    if (n == 1)
        return {m};

    // pick a prime keeping m squarefree
    unsigned long p = 0;
    fp::Poly mbar;
    for (unsigned long cand :
         {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
          41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul,
          89ul, 97ul, 101ul, 103ul, 107ul, 109ul, 113ul, 127ul, 131ul,
          137ul, 139ul, 149ul, 151ul, 157ul, 163ul, 167ul, 173ul, 179ul,
          181ul, 191ul, 193ul, 197ul, 199ul, 211ul, 223ul, 227ul, 229ul}) {
        fp::Fp k(cand);
        fp::Poly fb = to_fp(k, m);
        if (fp::degree(fb) != n)
            continue; // unreachable for monic m
        if (fp::degree(fp::gcd(k, fb, fp::deriv(k, fb))) == 0) {
            p = cand;
            mbar = std::move(fb);
            break;
        }
    }
    if (!p)
        throw std::domain_error(
            "factor_z: no suitable prime below 230 (input too degenerate)");

    fp::Fp k(p);
    auto modular = fp::factor(k, mbar);
    std::vector<fp::Poly> bars;
    for (auto& [g, mult] : modular)
        bars.push_back(g); // squarefree: every mult is 1
    if (bars.size() == 1)
        return {m}; // irreducible mod p, hence over Z

    // lift to p^steps > 2 * bound
    Int bound = factor_bound(m);
    unsigned steps = 1;
    Int pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++steps;
    }
    std::vector<ZPoly> lifted = hensel_lift(m, bars, Int(p), steps);

    // subset recombination with symmetric representatives
    std::vector<ZPoly> out;
    ZPoly rest = m;
    ModCtx ctx{pk};
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i)
        alive[i] = int(i);

    auto try_subsets = [&](size_t card) -> bool {
        std::vector<size_t> idx(card);
        // iterate cardinality-card index subsets of alive in lex order
        std::function<bool(size_t, size_t)> rec = [&](size_t pos,
                                                      size_t start) -> bool {
            if (pos == card) {
                ZPoly prod{Int(1)};
                for (size_t t : idx)
                    prod = ctx.mul(prod, lifted[alive[t]]);
                for (Int& c : prod)
                    c = smod(c, pk);
                prod = ztrim(std::move(prod));
                if (auto q = zdivide_exact(rest, prod)) {
                    out.push_back(prod);
                    rest = *q;
                    std::vector<int> keep;
                    for (size_t t2 = 0, w = 0; t2 < alive.size(); ++t2) {
                        if (w < card && idx[w] == t2)
                            ++w;
                        else
                            keep.push_back(alive[t2]);
                    }
                    alive = std::move(keep);
                    return true;
                }
                return false;
            }
            for (size_t i = start; i + (card - pos) <= alive.size(); ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1))
                    return true;
            }
            return false;
        };
        return rec(0, 0);
    };

    size_t card = 1;
    while (2 * card <= alive.size()) {
        if (try_subsets(card))
            continue; // rescan the same cardinality after extraction
        ++card;
    }
    if (zdegree(rest) > 0)
        out.push_back(rest);
    return out;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

} // namespace

int zdegree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly ztrim(ZPoly f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const Int& c : f)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return ztrim(std::move(r));
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return ztrim(std::move(r));
}

ZPoly zderiv(const ZPoly& f) {
    if (f.size() <= 1)
        return {};
    ZPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i)
        r[i - 1] = f[i] * Int(static_cast<unsigned long>(i));
    return r;
}

Int zeval(const ZPoly& f, const Int& x) {
    Int r = 0;
    for (size_t i = f.size(); i-- > 0;)
        r = r * x + f[i];
    return r;
}

std::optional<ZPoly> zdivide_exact(const ZPoly& num, const ZPoly& den) {
    return divide_exact_impl(num, den);
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    a = ztrim(std::move(a));
    b = ztrim(std::move(b));
    if (a.empty())
        std::swap(a, b);
    if (b.empty()) {
        if (!a.empty() && a.back() < 0)
            a = zscale(a, -1);
        return a;
    }
    auto primitive = [](ZPoly f) {
        Int c = zcontent(f);
        if (c > 1)
            for (Int& x : f)
                x /= c;
        if (!f.empty() && f.back() < 0)
            f = zscale(f, -1);
        return f;
    };
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.empty()) {
        // pseudo-remainder: lc(b)^(da-db+1) * a mod b
        int da = zdegree(a), db = zdegree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Int lead;
        mpz_pow_ui(lead.get_mpz_t(), b.back().get_mpz_t(),
                   static_cast<unsigned long>(da - db + 1));
        ZPoly r = zscale(a, lead);
        for (int i = da; i >= db; --i) {
            if (r[i] == 0)
                continue;
            Int c = r[i] / b[db];
            for (int j = 0; j <= db; ++j)
                r[i - db + j] -= c * b[j];
        }
        r = ztrim(std::move(r));
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return a;
}

ZFactors factor_z(const ZPoly& f_in) {
    ZPoly f = ztrim(f_in);
    if (f.empty())
        throw std::domain_error("factor_z: zero polynomial");

    ZFactors result;
    Int c = zcontent(f);
    result.sign = f.back() < 0 ? -1 : 1;
    result.content = c;
    ZPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        g[i] = f[i] / c * result.sign;

    if (zdegree(g) == 0)
        return result;

    // strip powers of x
    unsigned xmult = 0;
    while (g[0] == 0) {
        g.erase(g.begin());
        ++xmult;
    }
    if (xmult)
        result.factors.push_back({ZPoly{Int(0), Int(1)}, xmult});

    if (zdegree(g) >= 1) {
        ZPoly sf = *zdivide_exact(g, zgcd(g, zderiv(g)));
        const Int lead = sf.back();
        int n = zdegree(sf);

        // monic transform m(x) = lead^(n-1) * sf(x/lead)
        ZPoly m(sf.size());
        m[n] = 1;
        Int pw = 1;
        for (int i = n - 1; i >= 0; --i) {
            m[i] = sf[i] * pw;
            pw *= lead;
        }
        for (const ZPoly& h : factor_monic_squarefree(m)) {
            // map back: primitive part of h(lead * x), positive lc
            ZPoly w(h.size());
            Int s = 1;
            for (size_t i = 0; i < h.size(); ++i) {
                w[i] = h[i] * s;
                s *= lead;
            }
            Int wc = zcontent(w);
            for (Int& x : w)
                x /= wc;
            if (w.back() < 0)
                w = zscale(w, -1);
            unsigned mult = 0;
            ZPoly rest = g;
            while (auto q = zdivide_exact(rest, w)) {
                ++mult;
                rest = *q;
            }
            result.factors.push_back({std::move(w), mult});
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  return zpoly_less(a.first, b.first);
              });
    return result;
}

} // namespace goodred
