#include "goodred/fppoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace goodred::fp {

Fp::Fp(uint64_t prime) : p(prime) {
    if (p < 2)
        throw std::domain_error("Fp: modulus must be prime");
}

uint64_t Fp::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Fp::inv(uint64_t a) const {
    a %= p;
    if (a == 0)
        throw std::domain_error("Fp: inverse of zero");
    return pow(a, p - 2);
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

bool is_zero(const Poly& f) { return f.empty(); }

Poly constant(uint64_t c) { return c ? Poly{c} : Poly{}; }

Poly add(const Fp& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = k.add(x, y);
    }
    return trim(std::move(r));
}

Poly sub(const Fp& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = k.sub(x, y);
    }
    return trim(std::move(r));
}

Poly mul(const Fp& k, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    return trim(std::move(r));
}

Poly scale(const Fp& k, const Poly& a, uint64_t c) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = k.mul(a[i], c);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Fp& k, const Poly& num, const Poly& den) {
    if (den.empty())
        throw std::domain_error("fppoly: division by zero");
    Poly r = num;
    if (r.size() < den.size())
        return {{}, trim(std::move(r))};
    Poly q(r.size() - den.size() + 1, 0);
    uint64_t lead_inv = k.inv(den.back());
    for (size_t i = r.size(); i-- >= den.size();) {
        uint64_t c = k.mul(r[i], lead_inv);
        if (c) {
            q[i - den.size() + 1] = c;
            for (size_t j = 0; j < den.size(); ++j)
                r[i - den.size() + 1 + j] =
                    k.sub(r[i - den.size() + 1 + j], k.mul(c, den[j]));
        }
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

Poly mod(const Fp& k, const Poly& num, const Poly& den) {
    return divmod(k, num, den).second;
}

Poly make_monic(const Fp& k, const Poly& f) {
    if (f.empty() || f.back() == 1)
        return f;
    return scale(k, f, k.inv(f.back()));
}

Poly gcd(const Fp& k, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(k, a);
}

Poly deriv(const Fp& k, const Poly& f) {
    if (f.size() <= 1)
        return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i)
        r[i - 1] = k.mul(f[i], i % k.p);
    return trim(std::move(r));
}

Poly powmod(const Fp& k, Poly base, uint64_t e, const Poly& m) {
    Poly r = constant(1);
    base = mod(k, base, m);
    while (e) {
        if (e & 1)
            r = mod(k, mul(k, r, base), m);
        base = mod(k, mul(k, base, base), m);
        e >>= 1;
    }
    return r;
}

uint64_t eval(const Fp& k, const Poly& f, uint64_t x) {
    uint64_t r = 0;
    for (size_t i = f.size(); i-- > 0;)
        r = k.add(k.mul(r, x), f[i]);
    return r;
}

std::vector<Poly> frobenius_powers(const Fp& k, const Poly& m, int cap) {
    std::vector<Poly> out;
    Poly x = mod(k, Poly{0, 1}, m);
    out.push_back(x);
    for (int i = 1; i <= cap; ++i)
        out.push_back(powmod(k, out.back(), k.p, m));
    return out;
}

namespace {

/* f monic with f' = 0, i.e. f(x) = g(x^p); over the prime field the
 * p-th root just contracts exponents. */
Poly pth_root(const Fp& k, const Poly& f) {
    Poly g((f.size() - 1) / k.p + 1, 0);
    for (size_t i = 0; i < f.size(); i += k.p)
        g[i / k.p] = f[i];
    return trim(std::move(g));
}

std::vector<std::pair<Poly, unsigned>> squarefree_parts(const Fp& k, Poly f) {
    // Yun over F_p with the p-th power tail; f monic nonconstant.
    std::vector<std::pair<Poly, unsigned>> out;
    Poly d = deriv(k, f);
    if (is_zero(d)) {
        for (auto& [g, m] : squarefree_parts(k, pth_root(k, f)))
            out.emplace_back(std::move(g),
                             m * static_cast<unsigned>(k.p));
        return out;
    }
    Poly c = gcd(k, f, d);
    Poly w = divmod(k, f, c).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(k, w, c);
        Poly z = divmod(k, w, y).first;
        if (degree(z) > 0)
            out.emplace_back(make_monic(k, z), i);
        w = std::move(y);
        c = divmod(k, c, w).first;
        ++i;
    }
    if (degree(c) > 0)
        for (auto& [g, m] : squarefree_parts(k, pth_root(k, c)))
            out.emplace_back(std::move(g),
                             m * static_cast<unsigned>(k.p));
    return out;
}

/* Deterministic sweep order for splitting polynomials: monic of degree 1,
 * then degree 2, ... with coefficients counted in base p. */
Poly nth_probe(const Fp& k, uint64_t index) {
    unsigned deg = 1;
    uint64_t count = k.p; // monic polys of degree `deg`
    while (index >= count) {
        index -= count;
        ++deg;
        if (count > (uint64_t(1) << 62) / k.p)
            throw std::overflow_error("fppoly: probe space exhausted");
        count *= k.p;
    }
    Poly h(deg + 1, 0);
    h[deg] = 1;
    for (unsigned i = 0; i < deg && index; ++i) {
        h[i] = index % k.p;
        index /= k.p;
    }
    return trim(std::move(h));
}

void equal_degree_split(const Fp& k, const Poly& f, int d,
                        std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(f);
        return;
    }
    // exponent (p^d - 1)/2 must fit in a word at desk scale
    double bits = d * std::log2(double(k.p));
    if (bits > 62)
        throw std::overflow_error("fppoly: p^d exceeds 64 bits");
    for (uint64_t probe = 0;; ++probe) {
        Poly h = mod(k, nth_probe(k, probe), f);
        Poly g;
        if (k.p == 2) {
            // trace map h + h^2 + ... + h^(2^(d-1))
            Poly t = h, sq = h;
            for (int i = 1; i < d; ++i) {
                sq = mod(k, mul(k, sq, sq), f);
                t = add(k, t, sq);
            }
            g = gcd(k, t, f);
        } else {
            uint64_t e = 1;
            for (int i = 0; i < d; ++i)
                e *= k.p;
            e = (e - 1) / 2;
            Poly t = sub(k, powmod(k, h, e, f), constant(1));
            g = gcd(k, t, f);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(k, g, d, out);
            equal_degree_split(k, divmod(k, f, g).first, d, out);
            return;
        }
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Fp& k, const Poly& f_in) {
    Poly f = trim(f_in);
    if (degree(f) < 1)
        throw std::domain_error("fppoly: cannot factor a constant");
    f = make_monic(k, f);

    std::vector<std::pair<Poly, unsigned>> out;
    for (const auto& [part, mult] : squarefree_parts(k, f)) {
        // distinct-degree on the squarefree part
        Poly rem = part;
        Poly h = mod(k, Poly{0, 1}, rem);
        for (int d = 1; 2 * d <= degree(rem); ++d) {
            h = powmod(k, h, k.p, rem);
            Poly g = gcd(k, sub(k, h, Poly{0, 1}), rem);
            if (degree(g) > 0) {
                std::vector<Poly> pieces;
                equal_degree_split(k, g, d, pieces);
                for (auto& piece : pieces)
                    out.emplace_back(std::move(piece), mult);
                rem = divmod(k, rem, g).first;
                h = mod(k, h, rem);
            }
        }
        if (degree(rem) > 0)
            out.emplace_back(rem, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size() || a.first != b.first)
            return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const Fp& k, const Poly& f) {
    if (degree(f) < 1)
        return false;
    auto fs = factor(k, f);
    return fs.size() == 1 && fs[0].second == 1;
}

} // namespace goodred::fp
