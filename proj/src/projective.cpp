#include "goodred/projective.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace goodred {

ProjPoint::ProjPoint(const Int& a, const Int& b) : a_(a), b_(b) {
    if (a_ == 0 && b_ == 0)
        throw std::domain_error("ProjPoint: (0,0) is not a point");
    Int g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    a_ /= g;
    b_ /= g;
    if (b_ < 0 || (b_ == 0 && a_ < 0)) {
        a_ = -a_;
        b_ = -b_;
    }
}

ProjPoint ProjPoint::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("ProjPoint: expected \"a:b\", got \"" + text +
                                "\"");
    auto strip = [](std::string t) {
        t.erase(std::remove_if(t.begin(), t.end(),
                               [](char c) { return c == ' '; }),
                t.end());
        return t;
    };
    try {
        return {Int(strip(text.substr(0, colon))),
                Int(strip(text.substr(colon + 1)))};
    } catch (const std::invalid_argument&) {
        throw std::domain_error("ProjPoint: malformed coordinates in \"" +
                                text + "\"");
    }
}

std::string ProjPoint::str() const {
    return a_.get_str() + ":" + b_.get_str();
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
    return os << p.str();
}

Int cross_det(const ProjPoint& p, const ProjPoint& q) {
    return p.a() * q.b() - q.a() * p.b();
}

PointConfig::PointConfig(std::vector<ProjPoint> pts) : pts_(std::move(pts)) {
    if (pts_.empty())
        throw std::domain_error("PointConfig: empty configuration");
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw std::domain_error("PointConfig: repeated point");
}

PointConfig PointConfig::parse(const std::string& text) {
    std::string body = text;
    auto l = body.find('{');
    auto r = body.rfind('}');
    if (l != std::string::npos || r != std::string::npos) {
        if (l == std::string::npos || r == std::string::npos || l > r)
            throw std::domain_error("PointConfig: unbalanced braces");
        body = body.substr(l + 1, r - l - 1);
    }
    std::vector<ProjPoint> pts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (tok.find_first_not_of(' ') != std::string::npos)
            pts.push_back(ProjPoint::parse(tok));
    return PointConfig(std::move(pts));
}

bool PointConfig::contains(const ProjPoint& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::string PointConfig::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i)
            out += ", ";
        out += pts_[i].str();
    }
    return out + "}";
}

std::ostream& operator<<(std::ostream& os, const PointConfig& c) {
    return os << c.str();
}

ProjPointModP reduce_point(const ProjPoint& pt, const Int& p) {
    if (!is_prime(p))
        throw std::domain_error("reduce_point: modulus must be prime");
    Int a = pt.a() % p, b = pt.b() % p;
    if (a < 0)
        a += p;
    if (b < 0)
        b += p;
    if (a != 0) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        b = b * inv % p;
        a = 1;
    } else {
        b = 1; // gcd(a,b) = 1 rules out (0,0)
    }
    return {p, a, b};
}

std::string ProjPointModP::str() const {
    return a.get_str() + ":" + b.get_str() + " mod " + p.get_str();
}

GL2ZS::GL2ZS(const Rat& m11, const Rat& m12, const Rat& m21, const Rat& m22,
             SPrimeSet s)
    : m11_(m11), m12_(m12), m21_(m21), m22_(m22), s_(std::move(s)) {
    m11_.canonicalize();
    m12_.canonicalize();
    m21_.canonicalize();
    m22_.canonicalize();
    for (const Rat* e : {&m11_, &m12_, &m21_, &m22_})
        if (!is_s_integer(*e, s_))
            throw std::domain_error(
                "GL2ZS: entry " + Rat(*e).get_str() +
                " has a denominator outside S = " + s_.str());
    Rat d = det();
    if (d == 0 || !is_s_unit(d, s_))
        throw std::domain_error("GL2ZS: determinant " + d.get_str() +
                                " is not an S-unit for S = " + s_.str());
}

GL2ZS GL2ZS::identity(SPrimeSet s) {
    return {Rat(1), Rat(0), Rat(0), Rat(1), std::move(s)};
}

Rat GL2ZS::det() const {
    Rat d = m11_ * m22_ - m12_ * m21_;
    d.canonicalize();
    return d;
}

GL2ZS GL2ZS::inverse() const {
    Rat d = det();
    return {m22_ / d, -m12_ / d, -m21_ / d, m11_ / d, s_};
}

GL2ZS GL2ZS::transpose() const { return {m11_, m21_, m12_, m22_, s_}; }

GL2ZS GL2ZS::contragredient() const { return {m22_, -m21_, -m12_, m11_, s_}; }

bool GL2ZS::is_integral() const {
    for (const Rat* e : {&m11_, &m12_, &m21_, &m22_})
        if (e->get_den() != 1)
            return false;
    return true;
}

GL2ZS GL2ZS::operator*(const GL2ZS& rhs) const {
    if (!(s_ == rhs.s_))
        throw std::domain_error("GL2ZS: mismatched prime sets in product");
    return {m11_ * rhs.m11_ + m12_ * rhs.m21_,
            m11_ * rhs.m12_ + m12_ * rhs.m22_,
            m21_ * rhs.m11_ + m22_ * rhs.m21_,
            m21_ * rhs.m12_ + m22_ * rhs.m22_, s_};
}

std::string GL2ZS::str() const {
    return "[[" + m11_.get_str() + "," + m12_.get_str() + "],[" +
           m21_.get_str() + "," + m22_.get_str() + "]]";
}

ProjPoint apply_gl2(const GL2ZS& g, const ProjPoint& p) {
    Rat x = g.m11() * Rat(p.a()) + g.m12() * Rat(p.b());
    Rat y = g.m21() * Rat(p.a()) + g.m22() * Rat(p.b());
    x.canonicalize();
    y.canonicalize();
    Int d;
    mpz_lcm(d.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rat xs = x * d, ys = y * d;
    xs.canonicalize();
    ys.canonicalize();
    return {Int(xs.get_num()), Int(ys.get_num())};
}

PointConfig apply_gl2(const GL2ZS& g, const PointConfig& c) {
    std::vector<ProjPoint> out;
    out.reserve(c.size());
    for (const ProjPoint& p : c)
        out.push_back(apply_gl2(g, p));
    return PointConfig(std::move(out));
}

ProjPointModP apply_gl2_mod_p(const GL2ZS& g, const ProjPointModP& pt) {
    const Int& p = pt.p;
    auto red = [&p](const Rat& r) {
        if (valuation(Rat(r.get_den()), p) != 0)
            throw std::domain_error(
                "apply_gl2_mod_p: matrix entry not p-integral");
        Int num = r.get_num() % p, den = r.get_den() % p, inv;
        if (num < 0)
            num += p;
        if (den < 0)
            den += p;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        return Int(num * inv % p);
    };
    Int a11 = red(g.m11()), a12 = red(g.m12()), a21 = red(g.m21()),
        a22 = red(g.m22());
    if ((a11 * a22 - a12 * a21) % p == 0)
        throw std::domain_error("apply_gl2_mod_p: determinant vanishes mod p");
    Int x = (a11 * pt.a + a12 * pt.b) % p;
    Int y = (a21 * pt.a + a22 * pt.b) % p;
    if (x != 0) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        y = y * inv % p;
        x = 1;
    } else {
        y = 1;
    }
    return {p, x, y};
}

bool omega_member(const PointConfig& config, const SPrimeSet& s) {
    const auto& pts = config.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!is_s_unit(cross_det(pts[i], pts[j]), s))
                return false;
    return true;
}

std::set<Int> colliding_primes(const PointConfig& config) {
    std::set<Int> out;
    const auto& pts = config.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Int d = cross_det(pts[i], pts[j]);
            if (abs(d) == 1)
                continue;
            for (const auto& [p, e] : factorize(d).factors)
                out.insert(p);
        }
    return out;
}

} // namespace goodred
