#include "goodred/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace goodred {

namespace {

/* closure of a subset under the group operation */
std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> queue{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int s : gens) {
            int next = g.op(queue[head], s);
            if (!in[next]) {
                in[next] = 1;
                queue.push_back(next);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) {
    order_ = static_cast<int>(table.size());
    if (order_ < 1)
        throw std::domain_error("FiniteGroup: empty table");
    mul_.assign(static_cast<std::size_t>(order_) * order_, -1);
    for (int i = 0; i < order_; ++i) {
        if (static_cast<int>(table[i].size()) != order_)
            throw std::domain_error("FiniteGroup: table is not square");
        for (int j = 0; j < order_; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= order_)
                throw std::domain_error("FiniteGroup: entry out of range");
            mul_[i * order_ + j] = v;
        }
    }
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int x = 0; x < order_ && ok; ++x)
            ok = op(e, x) == x && op(x, e) == x;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0)
        throw std::domain_error("FiniteGroup: no identity element");
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::domain_error("FiniteGroup: not associative");
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (op(a, b) == identity_ && op(b, a) == identity_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0)
            throw std::domain_error("FiniteGroup: missing inverse");
    }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // indices 0..n-1: rotations r^i; n..2n-1: reflections s·r^i
    const int m = 2 * n;
    auto idx = [n](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t[idx(false, i)][idx(false, j)] = idx(false, i + j);
            t[idx(false, i)][idx(true, j)] = idx(true, j - i);
            t[idx(true, i)][idx(false, j)] = idx(true, i + j);
            t[idx(true, i)][idx(true, j)] = idx(false, j - i);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
    const int n = a.order() * b.order();
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] =
                        idx(a.op(x1, x2), b.op(y1, y2));
    return FiniteGroup(std::move(t));
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (op(a, b) != op(b, a))
                return false;
    return true;
}

std::vector<int> FiniteGroup::generators() const {
    if (order_ == 1)
        return {};
    for (int a = 0; a < order_; ++a)
        if (static_cast<int>(generated_subgroup(*this, {a}).size()) == order_)
            return {a};
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (static_cast<int>(generated_subgroup(*this, {a, b}).size()) ==
                order_)
                return {a, b};
    // greedy fallback: each step at least doubles the subgroup
    std::vector<int> gens;
    std::vector<int> have{identity_};
    while (static_cast<int>(have.size()) < order_) {
        for (int a = 0; a < order_; ++a)
            if (!std::binary_search(have.begin(), have.end(), a)) {
                gens.push_back(a);
                have = generated_subgroup(*this, gens);
                break;
            }
    }
    return gens;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            t[i][j] = op(i, j);
    return t;
}

GGroup::GGroup(FiniteGroup g, FiniteGroup a,
               std::vector<std::vector<int>> action)
    : g_(std::move(g)), a_(std::move(a)) {
    const int ng = g_.order(), na = a_.order();
    if (static_cast<int>(action.size()) != ng)
        throw std::domain_error("GGroup: action table has wrong height");
    action_.assign(static_cast<std::size_t>(ng) * na, -1);
    for (int s = 0; s < ng; ++s) {
        if (static_cast<int>(action[s].size()) != na)
            throw std::domain_error("GGroup: action table has wrong width");
        std::vector<char> seen(na, 0);
        for (int x = 0; x < na; ++x) {
            int y = action[s][x];
            if (y < 0 || y >= na)
                throw std::domain_error("GGroup: action entry out of range");
            if (seen[y])
                throw std::domain_error("GGroup: action is not bijective");
            seen[y] = 1;
            action_[s * na + x] = y;
        }
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < na; ++y)
                if (act(s, a_.op(x, y)) != a_.op(act(s, x), act(s, y)))
                    throw std::domain_error(
                        "GGroup: action is not by automorphisms");
    }
    for (int x = 0; x < na; ++x)
        if (act(g_.identity(), x) != x)
            throw std::domain_error("GGroup: identity acts nontrivially");
    for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
            for (int x = 0; x < na; ++x)
                if (act(g_.op(s, t), x) != act(s, act(t, x)))
                    throw std::domain_error(
                        "GGroup: action fails the homomorphism law");
}

GGroup GGroup::trivial_action(const FiniteGroup& g, const FiniteGroup& a) {
    std::vector<std::vector<int>> table(g.order(),
                                        std::vector<int>(a.order()));
    for (auto& row : table)
        std::iota(row.begin(), row.end(), 0);
    return {g, a, std::move(table)};
}

GGroup GGroup::cyclic_on_cyclic(int n, int m, long k) {
    FiniteGroup g = FiniteGroup::cyclic(n), a = FiniteGroup::cyclic(m);
    std::vector<std::vector<int>> table(n, std::vector<int>(m));
    long kk = 1;
    for (int s = 0; s < n; ++s) {
        for (int x = 0; x < m; ++x)
            table[s][x] = static_cast<int>((((kk * x) % m) + m) % m);
        kk = ((kk * k) % m + m) % m;
    }
    return {std::move(g), std::move(a), std::move(table)};
}

Cocycle Cocycle::trivial(const GGroup& m) {
    return {std::vector<int>(m.g().order(), m.a().identity())};
}

bool is_cocycle(const GGroup& m, const Cocycle& f) {
    const auto& g = m.g();
    const auto& a = m.a();
    if (static_cast<int>(f.values.size()) != g.order())
        return false;
    for (int v : f.values)
        if (v < 0 || v >= a.order())
            return false;
    for (int s = 0; s < g.order(); ++s)
        for (int t = 0; t < g.order(); ++t)
            if (f.values[g.op(s, t)] !=
                a.op(f.values[s], m.act(s, f.values[t])))
                return false;
    return true;
}

std::vector<int> h0(const GGroup& m) {
    std::vector<int> out;
    for (int x = 0; x < m.a().order(); ++x) {
        bool fixed = true;
        for (int s = 0; s < m.g().order() && fixed; ++s)
            fixed = m.act(s, x) == x;
        if (fixed)
            out.push_back(x);
    }
    return out;
}

std::vector<Cocycle> cocycles(const GGroup& m) {
    const auto& g = m.g();
    const auto& a = m.a();
    const auto gens = g.generators();
    double candidates = std::pow(double(a.order()), double(gens.size()));
    if (candidates > 1e7)
        throw capacity_error("cocycles: |A|^#generators exceeds 10^7");

    // BFS schedule: every element as product known·generator
    struct Step {
        int result, from, gen_index;
    };
    std::vector<Step> schedule;
    {
        std::vector<char> known(g.order(), 0);
        std::vector<int> queue{g.identity()};
        known[g.identity()] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int next = g.op(queue[head], gens[gi]);
                if (!known[next]) {
                    known[next] = 1;
                    schedule.push_back(
                        {next, queue[head], static_cast<int>(gi)});
                    queue.push_back(next);
                }
            }
    }

    std::vector<Cocycle> out;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        std::vector<int> vals(g.order(), -1);
        vals[g.identity()] = a.identity();
        // values on generators come from the odometer
        const std::vector<int>& gen_val = choice;
        bool ok = true;
        for (std::size_t gi = 0; gi < gens.size() && ok; ++gi) {
            if (vals[gens[gi]] == -1)
                vals[gens[gi]] = gen_val[gi];
            else
                ok = vals[gens[gi]] == gen_val[gi];
        }
        if (ok)
            for (const Step& st : schedule) {
                // f(x·s) = f(x) · x f(s)
                int val =
                    a.op(vals[st.from],
                         m.act(st.from, gen_val[st.gen_index]));
                if (vals[st.result] == -1)
                    vals[st.result] = val;
                else if (vals[st.result] != val) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            Cocycle f{std::move(vals)};
            if (is_cocycle(m, f))
                out.push_back(std::move(f));
        }
        // advance the odometer
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == a.order())
            choice[pos++] = 0;
        if (pos == choice.size())
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Cocycle& x, const Cocycle& y) {
                  return x.values < y.values;
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> cohomologous(const GGroup& m, const Cocycle& f,
                                const Cocycle& g) {
    const auto& a = m.a();
    const auto& gr = m.g();
    if (static_cast<int>(f.values.size()) != gr.order() ||
        static_cast<int>(g.values.size()) != gr.order())
        throw std::domain_error("cohomologous: cocycle size mismatch");
    for (int c = 0; c < a.order(); ++c) {
        bool ok = true;
        for (int s = 0; s < gr.order() && ok; ++s)
            ok = g.values[s] ==
                 a.op(a.op(a.inv(c), f.values[s]), m.act(s, c));
        if (ok)
            return c;
    }
    return std::nullopt;
}

H1Finite h1_finite(const GGroup& m) {
    H1Finite out;
    out.cocycles = cocycles(m);
    std::vector<char> assigned(out.cocycles.size(), 0);
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        if (assigned[i])
            continue;
        std::vector<std::size_t> cls{i};
        assigned[i] = 1;
        for (std::size_t j = i + 1; j < out.cocycles.size(); ++j)
            if (!assigned[j] &&
                cohomologous(m, out.cocycles[i], out.cocycles[j])) {
                cls.push_back(j);
                assigned[j] = 1;
            }
        out.classes.push_back(std::move(cls));
    }
    // the principal class (containing the trivial cocycle) comes first
    Cocycle triv = Cocycle::trivial(m);
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
        bool has_trivial = false;
        for (std::size_t idx : out.classes[k])
            if (out.cocycles[idx] == triv)
                has_trivial = true;
        if (has_trivial) {
            std::swap(out.classes[0], out.classes[k]);
            break;
        }
    }
    return out;
}

GGroup twist(const GGroup& m, const Cocycle& f) {
    const auto& g = m.g();
    const auto& a = m.a();
    if (!is_cocycle(m, f))
        throw std::domain_error("twist: not a valid cocycle");
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(a.order()));
    for (int s = 0; s < g.order(); ++s)
        for (int x = 0; x < a.order(); ++x)
            table[s][x] = a.op(a.op(f.values[s], m.act(s, x)),
                               a.inv(f.values[s]));
    return {g, a, std::move(table)}; // construction re-validates the laws
}

TwistableSet::TwistableSet(GGroup b_, std::vector<std::vector<int>> b_act,
                           std::vector<std::vector<int>> g_act)
    : b(std::move(b_)) {
    const int nb = b.a().order();
    const int ng = b.g().order();
    if (b_act.empty() || static_cast<int>(b_act.size()) != nb)
        throw std::domain_error("TwistableSet: bad B-action table");
    size = static_cast<int>(b_act[0].size());
    if (static_cast<int>(g_act.size()) != ng)
        throw std::domain_error("TwistableSet: bad G-action table");
    b_action.assign(static_cast<std::size_t>(nb) * size, -1);
    g_action.assign(static_cast<std::size_t>(ng) * size, -1);
    for (int e = 0; e < nb; ++e)
        for (int s = 0; s < size; ++s)
            b_action[e * size + s] = b_act[e][s];
    for (int s = 0; s < ng; ++s)
        for (int x = 0; x < size; ++x)
            g_action[s * size + x] = g_act[s][x];

    const auto& bb = b.a();
    for (int s = 0; s < size; ++s)
        if (bact(bb.identity(), s) != s)
            throw std::domain_error("TwistableSet: B-identity moves points");
    for (int e = 0; e < nb; ++e)
        for (int e2 = 0; e2 < nb; ++e2)
            for (int s = 0; s < size; ++s)
                if (bact(bb.op(e, e2), s) != bact(e, bact(e2, s)))
                    throw std::domain_error(
                        "TwistableSet: B-action law fails");
    const auto& gg = b.g();
    for (int x = 0; x < size; ++x)
        if (gact(gg.identity(), x) != x)
            throw std::domain_error("TwistableSet: G-identity moves points");
    for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
            for (int x = 0; x < size; ++x)
                if (gact(gg.op(s, t), x) != gact(s, gact(t, x)))
                    throw std::domain_error(
                        "TwistableSet: G-action law fails");
    for (int s = 0; s < ng; ++s)
        for (int e = 0; e < nb; ++e)
            for (int x = 0; x < size; ++x)
                if (gact(s, bact(e, x)) != bact(b.act(s, e), gact(s, x)))
                    throw std::domain_error(
                        "TwistableSet: actions are incompatible");
}

std::vector<std::vector<int>> twist_set(const TwistableSet& ts,
                                        const Cocycle& f) {
    const auto& g = ts.b.g();
    if (!is_cocycle(ts.b, f))
        throw std::domain_error("twist_set: not a valid cocycle");
    std::vector<std::vector<int>> out(g.order(), std::vector<int>(ts.size));
    for (int s = 0; s < g.order(); ++s)
        for (int x = 0; x < ts.size; ++x)
            out[s][x] = ts.bact(f.values[s], ts.gact(s, x));
    // validate the twisted action laws
    for (int s = 0; s < g.order(); ++s)
        for (int t = 0; t < g.order(); ++t)
            for (int x = 0; x < ts.size; ++x)
                if (out[g.op(s, t)][x] != out[s][out[t][x]])
                    throw std::domain_error(
                        "twist_set: twisted action fails the law");
    return out;
}

std::vector<int> fixed_points(const TwistableSet& ts,
                              const std::vector<std::vector<int>>& g_action) {
    std::vector<int> out;
    for (int x = 0; x < ts.size; ++x) {
        bool fixed = true;
        for (int s = 0; s < ts.b.g().order() && fixed; ++s)
            fixed = g_action[s][x] == x;
        if (fixed)
            out.push_back(x);
    }
    return out;
}

ShortExactSeq::ShortExactSeq(GGroup a_, GGroup b_, GGroup c_,
                             std::vector<int> u_, std::vector<int> v_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), u(std::move(u_)),
      v(std::move(v_)) {
    const auto &ga = a.a(), &gb = b.a(), &gc = c.a();
    if (a.g().order() != b.g().order() || b.g().order() != c.g().order() ||
        a.g().table() != b.g().table() || b.g().table() != c.g().table())
        throw std::domain_error("ShortExactSeq: mismatched acting groups");
    if (static_cast<int>(u.size()) != ga.order() ||
        static_cast<int>(v.size()) != gb.order())
        throw std::domain_error("ShortExactSeq: bad map sizes");
    for (int x = 0; x < ga.order(); ++x)
        for (int y = 0; y < ga.order(); ++y)
            if (u[ga.op(x, y)] != gb.op(u[x], u[y]))
                throw std::domain_error("ShortExactSeq: u not a hom");
    for (int x = 0; x < gb.order(); ++x)
        for (int y = 0; y < gb.order(); ++y)
            if (v[gb.op(x, y)] != gc.op(v[x], v[y]))
                throw std::domain_error("ShortExactSeq: v not a hom");
    std::set<int> u_im(u.begin(), u.end());
    if (u_im.size() != u.size())
        throw std::domain_error("ShortExactSeq: u not injective");
    std::set<int> v_im(v.begin(), v.end());
    if (static_cast<int>(v_im.size()) != gc.order())
        throw std::domain_error("ShortExactSeq: v not surjective");
    for (int x = 0; x < gb.order(); ++x) {
        bool in_ker = v[x] == gc.identity();
        bool in_im = u_im.count(x) > 0;
        if (in_ker != in_im)
            throw std::domain_error("ShortExactSeq: ker v ≠ im u");
    }
    for (int s = 0; s < a.g().order(); ++s) {
        for (int x = 0; x < ga.order(); ++x)
            if (u[a.act(s, x)] != b.act(s, u[x]))
                throw std::domain_error("ShortExactSeq: u not equivariant");
        for (int x = 0; x < gb.order(); ++x)
            if (v[b.act(s, x)] != c.act(s, v[x]))
                throw std::domain_error("ShortExactSeq: v not equivariant");
    }
}

namespace {

/* index of the H1 class containing the given cocycle */
std::size_t class_of(const GGroup& m, const H1Finite& h1, const Cocycle& f) {
    for (std::size_t k = 0; k < h1.classes.size(); ++k)
        if (cohomologous(m, h1.cocycles[h1.classes[k][0]], f))
            return k;
    throw std::domain_error("class_of: cocycle not found in H1");
}

std::map<int, int> inverse_map(const std::vector<int>& u) {
    std::map<int, int> r;
    for (std::size_t i = 0; i < u.size(); ++i)
        r[u[i]] = static_cast<int>(i);
    return r;
}

} // namespace

SixTermReport six_term_check(const ShortExactSeq& s) {
    SixTermReport rep{};
    const auto& g = s.a.g();
    const auto uinv = inverse_map(s.u);

    auto h0a = h0(s.a), h0b = h0(s.b), h0c = h0(s.c);
    rep.h0a = h0a.size();
    rep.h0b = h0b.size();
    rep.h0c = h0c.size();

    H1Finite h1a = h1_finite(s.a), h1b = h1_finite(s.b), h1c = h1_finite(s.c);
    rep.h1a = h1a.size();
    rep.h1b = h1b.size();
    rep.h1c = h1c.size();

    // --- H0 row exactness (u^0 injective is inherited).
    rep.h0_row_exact = true;
    std::set<int> u0_image;
    for (int x : h0a)
        u0_image.insert(s.u[x]);
    for (int y : h0b) {
        bool in_ker = s.v[y] == s.c.a().identity();
        if (in_ker != (u0_image.count(y) > 0))
            rep.h0_row_exact = false;
    }

    // --- δ: for c ∈ C^G, pick every lift and check the class agrees.
    auto delta_class = [&](int cfix) -> std::size_t {
        std::optional<std::size_t> cls;
        for (int lift = 0; lift < s.b.a().order(); ++lift) {
            if (s.v[lift] != cfix)
                continue;
            Cocycle d{std::vector<int>(g.order())};
            for (int sig = 0; sig < g.order(); ++sig) {
                int val = s.b.a().op(s.b.a().inv(lift),
                                     s.b.act(sig, lift));
                auto it = uinv.find(val);
                if (it == uinv.end())
                    throw std::domain_error(
                        "six_term_check: δ value escapes A");
                d.values[sig] = it->second;
            }
            if (!is_cocycle(s.a, d))
                throw std::domain_error("six_term_check: δ not a cocycle");
            std::size_t k = class_of(s.a, h1a, d);
            if (cls && *cls != k)
                throw std::domain_error(
                    "six_term_check: δ depends on the lift");
            cls = k;
        }
        return *cls;
    };
    std::set<std::size_t> delta_image;
    std::set<int> delta_kernel; // c ∈ C^G with δ(c) principal
    for (int cfix : h0c) {
        std::size_t k = delta_class(cfix);
        delta_image.insert(k);
        if (k == 0)
            delta_kernel.insert(cfix);
    }
    rep.delta_image = delta_image.size();

    // exactness at H^0(C): ker δ = v^0(B^G)
    std::set<int> v0_image;
    for (int y : h0b)
        v0_image.insert(s.v[y]);
    rep.delta_exact_at_h0c = v0_image == delta_kernel;

    // --- u^1 and v^1 on classes.
    auto u1_of = [&](std::size_t ka) {
        const Cocycle& f = h1a.cocycles[h1a.classes[ka][0]];
        Cocycle uf{std::vector<int>(g.order())};
        for (int sig = 0; sig < g.order(); ++sig)
            uf.values[sig] = s.u[f.values[sig]];
        return class_of(s.b, h1b, uf);
    };
    auto v1_of = [&](std::size_t kb) {
        const Cocycle& f = h1b.cocycles[h1b.classes[kb][0]];
        Cocycle vf{std::vector<int>(g.order())};
        for (int sig = 0; sig < g.order(); ++sig)
            vf.values[sig] = s.v[f.values[sig]];
        return class_of(s.c, h1c, vf);
    };
    std::vector<std::size_t> u1(h1a.size()), v1(h1b.size());
    for (std::size_t k = 0; k < h1a.size(); ++k)
        u1[k] = u1_of(k);
    for (std::size_t k = 0; k < h1b.size(); ++k)
        v1[k] = v1_of(k);

    std::set<std::size_t> u1_image(u1.begin(), u1.end());
    rep.u1_image = u1_image.size();

    // exactness at H^1(A): classes killed by u^1 = image of δ
    std::set<std::size_t> u1_kernel;
    for (std::size_t k = 0; k < h1a.size(); ++k)
        if (u1[k] == 0)
            u1_kernel.insert(k);
    rep.exact_at_h1a = u1_kernel == delta_image;

    // --- C^G acts on H^1(A); the nonempty fibers of u^1 are the orbits.
    auto cg_act = [&](int cfix, std::size_t ka) -> std::size_t {
        int lift = 0;
        while (s.v[lift] != cfix)
            ++lift;
        const Cocycle& f = h1a.cocycles[h1a.classes[ka][0]];
        Cocycle moved{std::vector<int>(g.order())};
        for (int sig = 0; sig < g.order(); ++sig) {
            int val = s.b.a().op(
                s.b.a().op(s.b.a().inv(lift), s.u[f.values[sig]]),
                s.b.act(sig, lift));
            auto it = uinv.find(val);
            if (it == uinv.end())
                throw std::domain_error(
                    "six_term_check: C^G action escapes A");
            moved.values[sig] = it->second;
        }
        if (!is_cocycle(s.a, moved))
            throw std::domain_error(
                "six_term_check: C^G action breaks the cocycle law");
        return class_of(s.a, h1a, moved);
    };
    // orbit partition of H^1(A) under C^G
    std::vector<std::size_t> orbit_of(h1a.size());
    std::iota(orbit_of.begin(), orbit_of.end(), std::size_t{0});
    for (std::size_t k = 0; k < h1a.size(); ++k)
        for (int cfix : h0c) {
            std::size_t moved = cg_act(cfix, k);
            std::size_t ra = orbit_of[k], rb = orbit_of[moved];
            if (ra != rb)
                for (auto& o : orbit_of)
                    if (o == rb)
                        o = ra;
        }
    std::set<std::size_t> orbit_reps(orbit_of.begin(), orbit_of.end());
    rep.cg_orbits = orbit_reps.size();
    rep.fibers_are_cg_orbits = true;
    for (std::size_t i = 0; i < h1a.size(); ++i)
        for (std::size_t j = 0; j < h1a.size(); ++j)
            if ((u1[i] == u1[j]) != (orbit_of[i] == orbit_of[j]))
                rep.fibers_are_cg_orbits = false;

    // --- kernel of v^1 equals the image of u^1.
    std::set<std::size_t> v1_kernel;
    for (std::size_t k = 0; k < h1b.size(); ++k)
        if (v1[k] == 0)
            v1_kernel.insert(k);
    rep.v1_kernel = v1_kernel.size();
    rep.kernel_v1_is_u1_image =
        v1_kernel == u1_image && v1_kernel.size() == rep.cg_orbits;

    return rep;
}

std::string SixTermReport::str() const {
    std::ostringstream os;
    os << "h0: " << h0a << "," << h0b << "," << h0c << "  h1: " << h1a << ","
       << h1b << "," << h1c << "  delta_im=" << delta_image
       << " u1_im=" << u1_image << " ker_v1=" << v1_kernel
       << " orbits=" << cg_orbits << "  [" << (h0_row_exact ? "h0" : "H0!")
       << " " << (delta_exact_at_h0c ? "d0" : "D0!") << " "
       << (exact_at_h1a ? "h1a" : "H1A!") << " "
       << (fibers_are_cg_orbits ? "fib" : "FIB!") << " "
       << (kernel_v1_is_u1_image ? "ker" : "KER!") << "]";
    return os.str();
}

TwistedFiberReport twisted_fiber_check(const ShortExactSeq& s,
                                       const Cocycle& f) {
    TwistedFiberReport rep{};
    const auto& g = s.b.g();
    const auto& bb = s.b.a();
    if (!is_cocycle(s.b, f))
        throw std::domain_error("twisted_fiber_check: invalid cocycle");
    const auto uinv = inverse_map(s.u);

    // twisted G-group structures: σ*x = f(σ)·σx·f(σ)^{-1}
    GGroup tb = twist(s.b, f);
    std::vector<std::vector<int>> ta_table(g.order(),
                                           std::vector<int>(s.a.a().order()));
    for (int sig = 0; sig < g.order(); ++sig)
        for (int x = 0; x < s.a.a().order(); ++x) {
            int val = tb.act(sig, s.u[x]);
            auto it = uinv.find(val);
            if (it == uinv.end())
                throw std::domain_error(
                    "twisted_fiber_check: A is not stable under the twist");
            ta_table[sig][x] = it->second;
        }
    GGroup ta(s.a.g(), s.a.a(), std::move(ta_table));

    H1Finite h1b = h1_finite(s.b);
    H1Finite h1c = h1_finite(s.c);
    H1Finite h1ta = h1_finite(ta);

    // v^1 of [f] and the fiber over it
    auto v_push = [&](const Cocycle& h) {
        Cocycle vh{std::vector<int>(g.order())};
        for (int sig = 0; sig < g.order(); ++sig)
            vh.values[sig] = s.v[h.values[sig]];
        return vh;
    };
    std::size_t target = class_of(s.c, h1c, v_push(f));
    std::set<std::size_t> fiber;
    for (std::size_t k = 0; k < h1b.size(); ++k)
        if (class_of(s.c, h1c, v_push(h1b.cocycles[h1b.classes[k][0]])) ==
            target)
            fiber.insert(k);
    rep.fiber_size = fiber.size();
    rep.twisted_h1a = h1ta.size();

    // basepoint shift: g ↦ (σ ↦ u(g(σ))·f(σ))
    auto shift = [&](const Cocycle& tw) {
        Cocycle shifted{std::vector<int>(g.order())};
        for (int sig = 0; sig < g.order(); ++sig)
            shifted.values[sig] = bb.op(s.u[tw.values[sig]], f.values[sig]);
        if (!is_cocycle(s.b, shifted))
            throw std::domain_error(
                "twisted_fiber_check: shift is not a cocycle");
        return shifted;
    };
    std::set<std::size_t> image;
    for (std::size_t k = 0; k < h1ta.size(); ++k)
        image.insert(
            class_of(s.b, h1b, shift(h1ta.cocycles[h1ta.classes[k][0]])));
    rep.shifted_image = image.size();
    rep.image_equals_fiber = image == fiber;
    rep.distinguished_maps_to_f =
        class_of(s.b, h1b, shift(Cocycle::trivial(ta))) ==
        class_of(s.b, h1b, f);
    return rep;
}

std::string TwistedFiberReport::str() const {
    std::ostringstream os;
    os << "fiber=" << fiber_size << " twisted_h1a=" << twisted_h1a
       << " image=" << shifted_image << " ["
       << (distinguished_maps_to_f ? "dist" : "DIST!") << " "
       << (image_equals_fiber ? "img" : "IMG!") << "]";
    return os.str();
}

bool n_torsion_check(const GGroup& m, const Cocycle& f) {
    const auto& a = m.a();
    const auto& g = m.g();
    if (!a.is_abelian())
        throw std::domain_error("n_torsion_check: A must be abelian");
    if (!is_cocycle(m, f))
        throw std::domain_error("n_torsion_check: invalid cocycle");
    const int n = g.order();
    // witness b = ∏_τ f(τ)^{-1}
    int b = a.identity();
    for (int tau = 0; tau < n; ++tau)
        b = a.op(b, a.inv(f.values[tau]));
    for (int sig = 0; sig < n; ++sig) {
        int pow = a.identity();
        for (int i = 0; i < n; ++i)
            pow = a.op(pow, f.values[sig]);
        int rhs = a.op(a.inv(b), m.act(sig, b));
        if (pow != rhs)
            return false;
    }
    return true;
}

ZrModule::ZrModule(FiniteGroup g_, int rank_, std::vector<ZMat> rho_)
    : g(std::move(g_)), rank(rank_), rho(std::move(rho_)) {
    if (rank < 1)
        throw std::domain_error("ZrModule: rank must be positive");
    if (static_cast<int>(rho.size()) != g.order())
        throw std::domain_error("ZrModule: one matrix per group element");
    for (const ZMat& m : rho) {
        if (static_cast<int>(m.size()) != rank)
            throw std::domain_error("ZrModule: matrix size mismatch");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != rank)
                throw std::domain_error("ZrModule: matrix size mismatch");
        Int d = zmat_det(m);
        if (d != 1 && d != -1)
            throw std::domain_error("ZrModule: matrix not in GL_r(Z)");
    }
    if (!zmat_equal(rho[g.identity()], zmat_identity(rank)))
        throw std::domain_error("ZrModule: identity must act trivially");
    for (int s = 0; s < g.order(); ++s)
        for (int t = 0; t < g.order(); ++t)
            if (!zmat_equal(rho[g.op(s, t)], zmat_mul(rho[s], rho[t])))
                throw std::domain_error("ZrModule: rho is not a homomorphism");
}

Int H1ZrResult::order() const {
    Int o = 1;
    for (const Int& d : divisors)
        o *= d;
    return o;
}

H1ZrResult h1_zr(const ZrModule& m) {
    const int g = m.g.order();
    const int r = m.rank;
    const std::size_t dim = static_cast<std::size_t>(g) * r;

    // cocycle law as a linear system: f(st) - f(s) - rho(s) f(t) = 0
    ZMat t_mat;
    for (int s = 0; s < g; ++s)
        for (int t = 0; t < g; ++t) {
            int st = m.g.op(s, t);
            for (int i = 0; i < r; ++i) {
                std::vector<Int> row(dim, Int(0));
                row[st * r + i] += 1;
                row[s * r + i] -= 1;
                for (int j = 0; j < r; ++j)
                    row[t * r + j] -= m.rho[s][i][j];
                t_mat.push_back(std::move(row));
            }
        }
    ZMat kernel = integer_kernel(t_mat); // rows span Z^1
    const std::size_t z = kernel.size();

    // coboundaries: a ↦ (rho(s) a - a)_s
    ZMat w_rows;
    for (int j = 0; j < r; ++j) {
        std::vector<Int> cob(dim, Int(0));
        for (int s = 0; s < g; ++s)
            for (int i = 0; i < r; ++i)
                cob[s * r + i] = m.rho[s][i][j] - (i == j ? 1 : 0);
        auto w = solve_in_lattice(kernel, cob);
        if (!w)
            throw std::domain_error("h1_zr: coboundary outside Z^1");
        w_rows.push_back(std::move(*w));
    }

    H1ZrResult out;
    if (z == 0)
        return out;
    SmithResult snf = smith_normal_form(ZMat(w_rows));
    if (snf.rank < z)
        throw std::domain_error("h1_zr: H^1 has unexpected free part");
    // Z^z / rowspan(W): the component generators are the rows of V^{-T}
    // lifted through the kernel basis; V columns give them directly since
    // rowspan(W) = span{ d_i · (row i of V^{-1}) }.
    // Solve V^T x = e_i to recover row i of V^{-1}.
    for (std::size_t i = 0; i < z; ++i) {
        if (snf.diag[i] <= 1)
            continue;
        out.divisors.push_back(snf.diag[i]);
        // component generator = row i of V^{-1}: solve x^T V = e_i^T
        std::vector<Int> e(z, Int(0));
        e[i] = 1;
        auto x = solve_in_lattice(snf.v, e);
        if (!x)
            throw std::domain_error("h1_zr: failed to invert V");
        // lift through the kernel basis to a cocycle on G
        std::vector<Int> rep(dim, Int(0));
        for (std::size_t k = 0; k < z; ++k)
            for (std::size_t dpos = 0; dpos < dim; ++dpos)
                rep[dpos] += (*x)[k] * kernel[k][dpos];
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

FiniteZModule::FiniteZModule(FiniteGroup g_, std::vector<Int> moduli_,
                             std::vector<ZMat> rho_)
    : g(std::move(g_)), moduli(std::move(moduli_)), rho(std::move(rho_)) {
    const int r = static_cast<int>(moduli.size());
    if (r < 1)
        throw std::domain_error("FiniteZModule: empty module");
    for (const Int& mi : moduli)
        if (mi < 1)
            throw std::domain_error("FiniteZModule: moduli must be >= 1");
    if (static_cast<int>(rho.size()) != g.order())
        throw std::domain_error("FiniteZModule: one matrix per element");
    for (const ZMat& mm : rho) {
        if (static_cast<int>(mm.size()) != r)
            throw std::domain_error("FiniteZModule: matrix size mismatch");
        for (const auto& row : mm)
            if (static_cast<int>(row.size()) != r)
                throw std::domain_error(
                    "FiniteZModule: matrix size mismatch");
    }
    // rho must descend to ⊕ Z/m_i: m_j · rho_ij ≡ 0 mod m_i
    for (const ZMat& mm : rho)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if ((mm[i][j] * moduli[j]) % moduli[i] != 0)
                    throw std::domain_error(
                        "FiniteZModule: action does not descend");
    // remaining laws are validated by to_ggroup()
    to_ggroup();
}

GGroup FiniteZModule::to_ggroup() const {
    const int r = static_cast<int>(moduli.size());
    long total = 1;
    for (const Int& mi : moduli) {
        total *= mi.get_si();
        if (total > 200000)
            throw capacity_error("FiniteZModule: module too large to table");
    }
    auto decode = [&](long idx) {
        std::vector<long> c(r);
        for (int i = r - 1; i >= 0; --i) {
            long mi = moduli[i].get_si();
            c[i] = idx % mi;
            idx /= mi;
        }
        return c;
    };
    auto encode = [&](const std::vector<long>& c) {
        long idx = 0;
        for (int i = 0; i < r; ++i)
            idx = idx * moduli[i].get_si() + c[i];
        return idx;
    };
    std::vector<std::vector<int>> add(total, std::vector<int>(total));
    for (long x = 0; x < total; ++x)
        for (long y = 0; y < total; ++y) {
            auto cx = decode(x), cy = decode(y);
            std::vector<long> cz(r);
            for (int i = 0; i < r; ++i)
                cz[i] = (cx[i] + cy[i]) % moduli[i].get_si();
            add[x][y] = static_cast<int>(encode(cz));
        }
    FiniteGroup a(std::move(add));
    std::vector<std::vector<int>> action(g.order(), std::vector<int>(total));
    for (int s = 0; s < g.order(); ++s)
        for (long x = 0; x < total; ++x) {
            auto cx = decode(x);
            std::vector<long> cy(r, 0);
            for (int i = 0; i < r; ++i) {
                Int acc = 0;
                for (int j = 0; j < r; ++j)
                    acc += rho[s][i][j] * Int(cx[j]);
                Int red = acc % moduli[i];
                if (red < 0)
                    red += moduli[i];
                cy[i] = red.get_si();
            }
            action[s][x] = static_cast<int>(encode(cy));
        }
    return {g, std::move(a), std::move(action)};
}

Int h1_order_lattice(const FiniteZModule& m) {
    const int g = m.g.order();
    const int r = static_cast<int>(m.moduli.size());
    const std::size_t dim = static_cast<std::size_t>(g) * r;
    const std::size_t ncons = static_cast<std::size_t>(g) * g * r;

    // kernel of [T | -L] projects onto the congruence lattice K_y
    ZMat big;
    std::size_t row_idx = 0;
    for (int s = 0; s < g; ++s)
        for (int t = 0; t < g; ++t) {
            int st = m.g.op(s, t);
            for (int i = 0; i < r; ++i) {
                std::vector<Int> row(dim + ncons, Int(0));
                row[st * r + i] += 1;
                row[s * r + i] -= 1;
                for (int j = 0; j < r; ++j)
                    row[t * r + j] -= m.rho[s][i][j];
                row[dim + row_idx] = -m.moduli[i];
                big.push_back(std::move(row));
                ++row_idx;
            }
        }
    ZMat kernel = integer_kernel(big);
    ZMat ky;
    for (const auto& krow : kernel)
        ky.emplace_back(krow.begin(), krow.begin() + dim);

    Int lambda_g = 1; // [Z^dim : Λ^g]
    for (int s = 0; s < g; ++s)
        for (int i = 0; i < r; ++i)
            lambda_g *= m.moduli[i];

    Int ky_index = lattice_index_in_zn(ky, dim);
    if (ky_index == 0)
        throw std::domain_error("h1_order_lattice: degenerate Z^1 lattice");
    Int z1;
    mpz_divexact(z1.get_mpz_t(), lambda_g.get_mpz_t(), ky_index.get_mpz_t());

    // B^1 + Λ^g
    ZMat bgen;
    for (int j = 0; j < r; ++j) {
        std::vector<Int> cob(dim, Int(0));
        for (int s = 0; s < g; ++s)
            for (int i = 0; i < r; ++i)
                cob[s * r + i] = m.rho[s][i][j] - (i == j ? 1 : 0);
        bgen.push_back(std::move(cob));
    }
    for (int s = 0; s < g; ++s)
        for (int i = 0; i < r; ++i) {
            std::vector<Int> lam(dim, Int(0));
            lam[s * r + i] = m.moduli[i];
            bgen.push_back(std::move(lam));
        }
    Int b_index = lattice_index_in_zn(bgen, dim);
    Int b1;
    mpz_divexact(b1.get_mpz_t(), lambda_g.get_mpz_t(), b_index.get_mpz_t());

    Int h1;
    mpz_divexact(h1.get_mpz_t(), z1.get_mpz_t(), b1.get_mpz_t());
    return h1;
}

} // namespace goodred
