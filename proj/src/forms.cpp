#include "goodred/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "goodred/fppoly.hpp"

namespace goodred {

namespace {

std::string join_degrees(const std::vector<int>& ds) {
    std::string out = "[";
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(ds[i]);
    }
    return out + "]";
}

/* Determinant by fraction-free Bareiss elimination. */
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/* Resultant of binary forms of formal degrees d and e, coefficient
 * vectors descending in the x-power. */
Int sylvester_resultant(const std::vector<Int>& u, const std::vector<Int>& v) {
    const int d = static_cast<int>(u.size()) - 1;
    const int e = static_cast<int>(v.size()) - 1;
    const int n = d + e;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int r = 0; r < e; ++r)
        for (int j = 0; j <= d; ++j)
            m[r][r + j] = u[j];
    for (int r = 0; r < d; ++r)
        for (int j = 0; j <= e; ++j)
            m[e + r][r + j] = v[j];
    return bareiss_det(std::move(m));
}

/* Res(f_x, f_y) = disc_const(n) * Δ(f); the constant is pinned once per
 * degree against the root-product value of a reference split form. */
const Int& disc_const(int n) {
    static std::mutex mu;
    static std::map<int, Int> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // reference form ∏_{i=0}^{n-1} (x - i y): roots [i : 1]
    std::vector<Int> ref{Int(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<Int> next(ref.size() + 1, Int(0));
        for (size_t j = 0; j < ref.size(); ++j) {
            next[j] += ref[j];
            next[j + 1] -= ref[j] * i;
        }
        ref = std::move(next);
    }
    Int root_disc = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            root_disc *= Int(i - j) * Int(i - j);

    std::vector<Int> fx(n), fy(n);
    for (int i = 0; i < n; ++i) {
        fx[i] = ref[i] * Int(n - i);     // d/dx of x^(n-i) term block
        fy[i] = ref[i + 1] * Int(i + 1); // d/dy
    }
    Int res = sylvester_resultant(fx, fy);
    Int c;
    mpz_divexact(c.get_mpz_t(), res.get_mpz_t(), root_disc.get_mpz_t());
    return cache.emplace(n, std::move(c)).first->second;
}

using RatVec = std::vector<Rat>; // binary form coefficients, a_n..a_0

RatVec rat_conv(const RatVec& a, const RatVec& b) {
    RatVec r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (Rat& x : r)
        x.canonicalize();
    return r;
}

struct uf_t {
    std::vector<std::size_t> parent;
    explicit uf_t(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

BinaryForm::BinaryForm(int degree, std::vector<Int> coeffs)
    : n_(degree), c_(std::move(coeffs)) {
    if (n_ < 1)
        throw std::domain_error("BinaryForm: degree must be at least 1");
    if (c_.size() != static_cast<size_t>(n_) + 1)
        throw std::domain_error("BinaryForm: expected " +
                                std::to_string(n_ + 1) + " coefficients");
    if (std::all_of(c_.begin(), c_.end(),
                    [](const Int& c) { return c == 0; }))
        throw std::domain_error("BinaryForm: zero form");
}

BinaryForm BinaryForm::parse(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](char c) { return c == ' '; }),
               body.end());
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    std::vector<Int> cs;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            cs.emplace_back(tok);
    const int deg = static_cast<int>(cs.size()) - 1;
    return BinaryForm(deg, std::move(cs));
}

Int BinaryForm::content() const {
    Int g = 0;
    for (const Int& c : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly BinaryForm::dehomogenize() const {
    ZPoly u(c_.rbegin(), c_.rend());
    return ztrim(std::move(u));
}

std::string BinaryForm::str() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i)
            out += ",";
        out += c_[i].get_str();
    }
    return out + "]";
}

std::string BinaryForm::pretty() const {
    std::string out;
    for (int i = n_; i >= 0; --i) {
        const Int& a = coeff(i);
        if (a == 0)
            continue;
        if (!out.empty())
            out += a > 0 ? " + " : " - ";
        else if (a < 0)
            out += "-";
        Int mag = abs(a);
        std::string monomial;
        if (i > 0)
            monomial += i == 1 ? "x" : "x^" + std::to_string(i);
        if (n_ - i > 0) {
            if (!monomial.empty())
                monomial += "*";
            monomial += n_ - i == 1 ? "y" : "y^" + std::to_string(n_ - i);
        }
        if (monomial.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += monomial;
        else
            out += mag.get_str() + "*" + monomial;
    }
    return out;
}

bool operator<(const BinaryForm& f, const BinaryForm& g) {
    if (f.n_ != g.n_)
        return f.n_ < g.n_;
    for (size_t i = 0; i < f.c_.size(); ++i)
        if (int c = cmp(f.c_[i], g.c_[i]); c != 0)
            return c < 0;
    return false;
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
    return os << f.str();
}

non_split_error::non_split_error(std::vector<int> degrees)
    : std::domain_error("form does not split over Q; irreducible factor "
                        "degrees " +
                        join_degrees(degrees)),
      degrees_(std::move(degrees)) {}

Int discriminant(const BinaryForm& f) {
    const int n = f.degree();
    if (n < 2)
        throw std::domain_error("discriminant: degree must be at least 2");
    if (n == 2) {
        const Int &a = f.coeff(2), &b = f.coeff(1), &c = f.coeff(0);
        return b * b - 4 * a * c;
    }
    if (n == 3) {
        const Int &a = f.coeff(3), &b = f.coeff(2), &c = f.coeff(1),
                  &d = f.coeff(0);
        return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
               4 * a * c * c * c - 27 * a * a * d * d;
    }
    const auto& cs = f.coeffs(); // a_n .. a_0
    std::vector<Int> fx(n), fy(n);
    for (int k = 0; k < n; ++k) {
        fx[k] = cs[k] * Int(n - k); // coefficient of x^(n-1-k) y^k in f_x
        fy[k] = cs[k + 1] * Int(k + 1); // same slot in f_y
    }
    Int res = sylvester_resultant(fx, fy);
    Int d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), disc_const(n).get_mpz_t());
    return d;
}

std::vector<Rat> act_rational(const GL2ZS& g, const BinaryForm& f) {
    const int n = f.degree();
    // powers of (m11 x + m21 y) and (m12 x + m22 y)
    std::vector<RatVec> pows_a(n + 1), pows_b(n + 1);
    pows_a[0] = {Rat(1)};
    pows_b[0] = {Rat(1)};
    RatVec la{g.m11(), g.m21()}, lb{g.m12(), g.m22()};
    for (int i = 1; i <= n; ++i) {
        pows_a[i] = rat_conv(pows_a[i - 1], la);
        pows_b[i] = rat_conv(pows_b[i - 1], lb);
    }
    RatVec acc(n + 1, Rat(0));
    for (int i = n; i >= 0; --i) {
        const Int& ai = f.coeff(i);
        if (ai == 0)
            continue;
        RatVec term = rat_conv(pows_a[i], pows_b[n - i]);
        for (size_t k = 0; k < term.size(); ++k)
            acc[k] += Rat(ai) * term[k];
    }
    for (Rat& x : acc)
        x.canonicalize();
    return acc;
}

BinaryForm act(const GL2ZS& g, const BinaryForm& f) {
    std::vector<Rat> rs = act_rational(g, f);
    Int d = 1;
    for (const Rat& r : rs)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Int> cs(rs.size());
    for (size_t i = 0; i < rs.size(); ++i) {
        Rat scaled = rs[i] * d;
        scaled.canonicalize();
        cs[i] = scaled.get_num();
    }
    return BinaryForm(f.degree(), std::move(cs));
}

PointConfig roots_config(const BinaryForm& f) {
    const int n = f.degree();
    if (n >= 2 && discriminant(f) == 0)
        throw std::domain_error("roots_config: repeated root (Δ = 0)");

    std::vector<ProjPoint> pts;
    std::vector<int> degs;
    ZPoly u = f.dehomogenize();
    int drop = n - zdegree(u);
    if (drop >= 1) {
        pts.push_back(ProjPoint::infinity());
        degs.push_back(1);
    }
    if (drop >= 2) // y^2 divides f; unreachable when Δ ≠ 0 is enforced
        throw std::domain_error("roots_config: repeated root at infinity");

    if (zdegree(u) >= 1) {
        for (const auto& [w, mult] : factor_z(u).factors) {
            if (mult > 1)
                throw std::domain_error("roots_config: repeated root");
            if (zdegree(w) == 1) {
                pts.emplace_back(-w[0], w[1]);
                degs.push_back(1);
            } else {
                degs.push_back(zdegree(w));
            }
        }
    }
    if (pts.size() != static_cast<size_t>(n))
        throw non_split_error(std::move(degs));
    return PointConfig(std::move(pts));
}

BinaryForm config_to_form(const PointConfig& config) {
    std::vector<Int> acc{Int(1)};
    for (const ProjPoint& p : config) {
        // multiply by (b x - a y); vectors are descending in the x-power
        std::vector<Int> next(acc.size() + 1, Int(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * p.b();
            next[j + 1] -= acc[j] * p.a();
        }
        acc = std::move(next);
    }
    return canonical_unit_scaling(
        BinaryForm(static_cast<int>(config.size()), std::move(acc)),
        SPrimeSet());
}

BinaryForm canonical_unit_scaling(const BinaryForm& f, const SPrimeSet& s) {
    Int scale = s_part_split(f.content(), s).first;
    std::vector<Int> cs = f.coeffs();
    if (scale > 1)
        for (Int& c : cs)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    for (const Int& c : cs) {
        if (c == 0)
            continue;
        if (c < 0)
            for (Int& x : cs)
                x = -x;
        break;
    }
    return BinaryForm(f.degree(), std::move(cs));
}

bool is_omega_form(const BinaryForm& f, const SPrimeSet& s) {
    if (f.degree() < 2)
        throw std::domain_error("is_omega_form: degree must be at least 2");
    Int d = discriminant(f);
    if (d == 0)
        return false;
    return is_s_unit(d, s) && is_s_unit(f.content(), s);
}

unsigned FactorPatternModP::total_degree() const {
    unsigned t = 0;
    for (const auto& g : factors)
        t += g.multiplicity * static_cast<unsigned>(g.degree());
    return t;
}

std::string FactorPatternModP::str() const {
    std::string out = "mod " + p.get_str() + ":";
    for (const auto& g : factors) {
        out += " (";
        for (size_t i = 0; i < g.coeffs.size(); ++i) {
            if (i)
                out += ",";
            out += g.coeffs[i].get_str();
        }
        out += ")^" + std::to_string(g.multiplicity);
    }
    return out;
}

FactorPatternModP reduce_form_mod_p(const BinaryForm& f, const Int& p) {
    if (!is_prime(p))
        throw std::domain_error("reduce_form_mod_p: modulus must be prime");
    if (!p.fits_ulong_p() || p.get_ui() > (1ul << 31))
        throw capacity_error("reduce_form_mod_p: prime too large");
    const unsigned long pl = p.get_ui();
    fp::Fp k(pl);

    // remove p-content
    long v = -1;
    for (const Int& c : f.coeffs())
        if (c != 0) {
            long w = valuation(c, p);
            v = v < 0 ? w : std::min(v, w);
        }
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));

    const int n = f.degree();
    fp::Poly u(n + 1); // little-endian in x after dehomogenizing
    for (int i = 0; i <= n; ++i) {
        Int c = f.coeff(i) / pv;
        c %= p;
        if (c < 0)
            c += p;
        u[i] = c.get_ui();
    }
    u = fp::trim(std::move(u));

    FactorPatternModP out;
    out.p = p;
    int drop = n - fp::degree(u);
    if (drop > 0)
        out.factors.push_back(
            {{Int(0), Int(1)}, static_cast<unsigned>(drop)});
    if (fp::degree(u) >= 1) {
        for (const auto& [w, mult] : fp::factor(k, u)) {
            FactorPatternModP::Factor g;
            g.multiplicity = mult;
            g.coeffs.reserve(w.size());
            for (size_t i = w.size(); i-- > 0;)
                g.coeffs.emplace_back(static_cast<unsigned long>(w[i]));
            out.factors.push_back(std::move(g));
        }
    }
    return out;
}

namespace {

long rat_height(const Rat& r) {
    Int n = abs(Int(r.get_num())), d = r.get_den();
    Int h = n > d ? n : d;
    return h.fits_slong_p() ? h.get_si() : std::numeric_limits<long>::max();
}

/* Candidate matrix entries: reduced p/q with |p| ≤ bound and q an
 * S-supported positive integer ≤ bound, ordered by height. */
std::vector<Rat> candidate_entries(const SPrimeSet& s, unsigned bound) {
    std::vector<Int> dens{1};
    for (size_t i = 0; i < dens.size(); ++i)
        for (const Int& p : s.primes()) {
            Int d = dens[i] * p;
            if (d <= long(bound) &&
                std::find(dens.begin(), dens.end(), d) == dens.end())
                dens.push_back(d);
        }
    std::vector<Rat> vals;
    for (const Int& q : dens)
        for (long p = -long(bound); p <= long(bound); ++p) {
            Rat r(Int(p), q);
            r.canonicalize();
            if (r.get_den() == q)
                vals.push_back(r);
        }
    std::sort(vals.begin(), vals.end(), [](const Rat& a, const Rat& b) {
        long ha = rat_height(a), hb = rat_height(b);
        if (ha != hb)
            return ha < hb;
        return a < b;
    });
    return vals;
}

} // namespace

std::optional<EquivWitness> equivalent(const BinaryForm& f,
                                       const BinaryForm& g,
                                       const SPrimeSet& s, unsigned bound) {
    if (f.degree() != g.degree())
        throw std::domain_error("equivalent: degree mismatch");
    const int n = f.degree();

    Int df = n >= 2 ? discriminant(f) : Int(0);
    Int dg = n >= 2 ? discriminant(g) : Int(0);
    if (n >= 2) {
        if ((df == 0) != (dg == 0))
            return std::nullopt;
        if (df != 0) {
            // Δf/Δg = λ^(2n-2) / det^(n(n-1)) must be a positive S-unit
            // with exponents in gcd(2n-2, n(n-1))·Z at every p ∈ S
            Rat ratio(df, dg);
            ratio.canonicalize();
            if (ratio < 0 || !is_s_unit(ratio, s))
                return std::nullopt;
            long step = std::gcd(2L * n - 2, long(n) * (n - 1));
            for (const Int& p : s.primes())
                if (valuation(ratio, p) % step != 0)
                    return std::nullopt;
        }
    }

    const std::vector<Rat> vals = candidate_entries(s, bound);
    for (long h = 1; h <= long(bound); ++h) {
        size_t limit = 0;
        while (limit < vals.size() && rat_height(vals[limit]) <= h)
            ++limit;
        for (size_t i1 = 0; i1 < limit; ++i1)
            for (size_t i2 = 0; i2 < limit; ++i2)
                for (size_t i3 = 0; i3 < limit; ++i3)
                    for (size_t i4 = 0; i4 < limit; ++i4) {
                        long mh = std::max(
                            {rat_height(vals[i1]), rat_height(vals[i2]),
                             rat_height(vals[i3]), rat_height(vals[i4])});
                        if (mh != h)
                            continue; // covered at a smaller height
                        Rat det = vals[i1] * vals[i4] - vals[i2] * vals[i3];
                        det.canonicalize();
                        if (det == 0 || !is_s_unit(det, s))
                            continue;
                        GL2ZS gamma(vals[i1], vals[i2], vals[i3], vals[i4],
                                    s);
                        std::vector<Rat> gf = act_rational(gamma, f);
                        // find λ with gf = λ g
                        Rat lambda(0);
                        bool ok = true;
                        for (int k = 0; k <= n && ok; ++k) {
                            const Int& gc = g.coeffs()[k];
                            if (gc == 0) {
                                ok = gf[k] == 0;
                            } else if (lambda == 0) {
                                lambda = gf[k] / Rat(gc);
                                lambda.canonicalize();
                            } else {
                                ok = gf[k] == lambda * Rat(gc);
                            }
                        }
                        if (!ok || lambda == 0 ||
                            rat_height(lambda) > long(bound) ||
                            !is_s_unit(lambda, s))
                            continue;
                        return EquivWitness{gamma, lambda};
                    }
    }
    return std::nullopt;
}

namespace {

struct Quad {
    Int a, b, c;
};

Quad translate(const Quad& q, const Int& t) {
    // (a, b, c) -> (a, b + 2at, a t^2 + b t + c)
    return {q.a, q.b + 2 * q.a * t, q.a * t * t + q.b * t + q.c};
}

Quad flip(const Quad& q) {
    // the SL2 move (x,y) -> (-y,x): (a, b, c) -> (c, -b, a)
    return {q.c, -q.b, q.a};
}

bool quad_less(const Quad& x, const Quad& y) {
    if (int c = cmp(x.a, y.a); c != 0)
        return c < 0;
    if (int c = cmp(x.b, y.b); c != 0)
        return c < 0;
    return cmp(x.c, y.c) < 0;
}

/* b normalized into (-a, a] for positive definite reduction. */
Quad normalize_definite(const Quad& q) {
    Int twoa = 2 * q.a;
    Int r = q.b % twoa;
    if (r < 0)
        r += twoa;
    if (r > q.a)
        r -= twoa; // r in (-a, a]
    Int t = (r - q.b) / twoa;
    return translate(q, t);
}

Quad reduce_positive_definite(Quad q) {
    for (;;) {
        q = normalize_definite(q);
        if (q.a > q.c) {
            q = flip(q);
            continue;
        }
        if (q.a == q.c && q.b < 0)
            q.b = -q.b;
        return q;
    }
}

/* Indefinite non-square case: Gauss cycle, lexicographically least. */
Quad reduce_indefinite(Quad q, const Int& disc) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    auto is_reduced = [&](const Quad& x) {
        if (x.b < 1 || x.b > s)
            return false;
        Int twoa = 2 * abs(x.a);
        return (twoa + x.b) * (twoa + x.b) > disc && twoa <= x.b + s;
    };
    auto rho = [&](const Quad& x) {
        Int twoc = 2 * abs(x.c);
        // b* ≡ -b (mod 2|c|) in the standard window
        Int target = -x.b % twoc;
        if (target < 0)
            target += twoc;
        Int upper = abs(x.c) > s ? abs(x.c) : s; // window upper bound
        Int bstar = target + ((upper - target) / twoc) * twoc;
        while (bstar > upper)
            bstar -= twoc;
        Int cstar = (bstar * bstar - disc) / (4 * x.c);
        return Quad{x.c, bstar, cstar};
    };
    int guard = 0;
    while (!is_reduced(q)) {
        q = rho(q);
        if (++guard > 10000)
            throw std::domain_error(
                "gauss_reduce_quadratic: reduction failed to converge");
    }
    Quad best = q, cur = q;
    do {
        cur = rho(cur);
        if (quad_less(cur, best))
            best = cur;
    } while (!(cur.a == q.a && cur.b == q.b && cur.c == q.c));
    return best;
}

/* Square discriminant k^2: canonical representative (a mod k, k, 0),
 * computed through an explicit zero vector of the form. */
Quad reduce_square_disc(const Quad& q0, const Int& k_in) {
    Int content;
    mpz_gcd(content.get_mpz_t(), q0.a.get_mpz_t(), q0.b.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q0.c.get_mpz_t());
    Quad q{q0.a / content, q0.b / content, q0.c / content};
    Int k = k_in / content;

    // primitive zero vector of q
    Int x0, y0;
    if (q.a == 0) {
        x0 = 1;
        y0 = 0;
    } else {
        x0 = -q.b + k; // root (-b + k) / 2a of a x^2 + b x y + c y^2
        y0 = 2 * q.a;
        Int g;
        mpz_gcd(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t());
        if (g > 1) {
            x0 /= g;
            y0 /= g;
        }
    }
    // complete (x0, y0) to an SL2 matrix with first row (x0, y0); acting
    // by it sends the a-coefficient to q(x0, y0) = 0
    Int u, v, g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x0.get_mpz_t(),
               y0.get_mpz_t());
    // x0 u + y0 v = 1; take second row (-v, u)
    // new coefficients: a' = q(x0,y0) = 0, c' = q(-v,u)
    auto eval = [&](const Int& x, const Int& y) -> Int {
        return q.a * x * x + q.b * x * y + q.c * y * y;
    };
    Int mv = -v;
    Int cnew = eval(mv, u);
    Int bnew = 2 * q.a * x0 * mv + q.b * (x0 * u + mv * y0) +
               2 * q.c * y0 * u;
    // (0, ±k, cnew) -> flip -> (cnew, ∓k, 0)
    Quad axis = flip(Quad{Int(0), bnew, cnew});
    if (axis.b < 0) {
        // (r, -k, 0) ~ (r^{-1} mod k, k, 0)
        Int r = axis.a, m11, m12, gg;
        mpz_gcdext(gg.get_mpz_t(), m11.get_mpz_t(), m12.get_mpz_t(),
                   r.get_mpz_t(), k.get_mpz_t());
        // r·m11 ≡ 1 (mod k); the witness matrix is [[m11, -m12], [k, r]]
        axis = Quad{m11, k, Int(0)};
    }
    // translate a into [0, k)
    Int amod = k == 0 ? axis.a : axis.a % k;
    if (k != 0 && amod < 0)
        amod += k;
    return {amod * content, k * content, Int(0)};
}

} // namespace

BinaryForm gauss_reduce_quadratic(const BinaryForm& f) {
    if (f.degree() != 2)
        throw std::domain_error("gauss_reduce_quadratic: degree must be 2");
    Int disc = discriminant(f);
    if (disc == 0)
        throw std::domain_error("gauss_reduce_quadratic: degenerate form");

    Quad q{f.coeff(2), f.coeff(1), f.coeff(0)};
    Quad out{0, 0, 0};
    if (disc < 0) {
        bool negated = q.a < 0;
        if (negated)
            q = {-q.a, -q.b, -q.c};
        q = reduce_positive_definite(q);
        out = negated ? Quad{-q.a, -q.b, -q.c} : q;
    } else if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Int k;
        mpz_sqrt(k.get_mpz_t(), disc.get_mpz_t());
        out = reduce_square_disc(q, k);
    } else {
        out = reduce_indefinite(q, disc);
    }
    return BinaryForm(2, {out.a, out.b, out.c});
}

std::vector<BinaryForm> enumerate_omega_forms(int degree, const SPrimeSet& s,
                                              long height) {
    if (degree < 2)
        throw std::domain_error(
            "enumerate_omega_forms: degree must be at least 2");
    std::set<BinaryForm> seen;
    if (height >= 1) {
        std::vector<long> odo(degree + 1, -height);
        const double total_log =
            (degree + 1) * std::log10(2.0 * height + 1.0);
        if (total_log > 8.5)
            throw capacity_error(
                "enumerate_omega_forms: more than ~3·10^8 candidates");
        for (;;) {
            bool all_zero =
                std::all_of(odo.begin(), odo.end(),
                            [](long c) { return c == 0; });
            if (!all_zero) {
                long g = 0;
                for (long c : odo)
                    g = std::gcd(g, std::abs(c));
                if (is_s_unit(Int(g), s)) {
                    std::vector<Int> cs(odo.begin(), odo.end());
                    BinaryForm cand(degree, std::move(cs));
                    Int d = discriminant(cand);
                    if (d != 0 && is_s_unit(d, s))
                        seen.insert(canonical_unit_scaling(cand, s));
                }
            }
            int pos = degree;
            while (pos >= 0 && odo[pos] == height)
                odo[pos--] = -height;
            if (pos < 0)
                break;
            ++odo[pos];
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>>
orbit_partition(const std::vector<BinaryForm>& forms, const SPrimeSet& s,
                unsigned bound) {
    if (forms.empty())
        return {};
    const int n = forms.front().degree();
    for (const auto& f : forms)
        if (f.degree() != n)
            throw std::domain_error("orbit_partition: mixed degrees");

    uf_t uf(forms.size());

    std::vector<std::size_t> reps; // candidates needing pairwise search
    if (n == 2) {
        std::map<BinaryForm, std::size_t> buckets;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            if (discriminant(forms[i]) == 0) {
                reps.push_back(i);
                continue;
            }
            BinaryForm key = gauss_reduce_quadratic(forms[i]);
            auto [it, fresh] = buckets.emplace(key, i);
            if (!fresh)
                uf.unite(i, it->second);
        }
        for (const auto& [key, i] : buckets)
            reps.push_back(i);
        std::sort(reps.begin(), reps.end());
    } else {
        reps.resize(forms.size());
        std::iota(reps.begin(), reps.end(), std::size_t{0});
    }

    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (uf.find(reps[i]) == uf.find(reps[j]))
                continue;
            if (equivalent(forms[reps[i]], forms[reps[j]], s, bound))
                uf.unite(reps[i], reps[j]);
        }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < forms.size(); ++i)
        groups[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

Int field_disc_quadratic(const BinaryForm& q) {
    if (q.degree() != 2)
        throw std::domain_error("field_disc_quadratic: degree must be 2");
    Int d = discriminant(q);
    if (d == 0 || (d > 0 && mpz_perfect_square_p(d.get_mpz_t())))
        throw std::domain_error("field_disc_quadratic: form is reducible");
    // squarefree kernel, sign preserved
    Int m = d < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factorize(d).factors)
        if (e % 2)
            m *= p;
    Int mm = m % 4;
    if (mm < 0)
        mm += 4;
    return mm == 1 ? m : 4 * m;
}

} // namespace goodred
