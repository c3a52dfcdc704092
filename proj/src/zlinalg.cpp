#include "goodred/zlinalg.hpp"

#include <algorithm>

namespace goodred {

ZMat zmat_identity(std::size_t n) {
    ZMat m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, std::vector<Int>(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

std::vector<Int> zmat_apply(const ZMat& a, const std::vector<Int>& x) {
    std::vector<Int> r(a.size(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            r[i] += a[i][j] * x[j];
    return r;
}

bool zmat_equal(const ZMat& a, const ZMat& b) { return a == b; }

Int zmat_det(ZMat m) {
    // fraction-free Bareiss
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
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

SmithResult smith_normal_form(ZMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = zmat_identity(rows);
    res.v = zmat_identity(cols);

    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // row_i -= q * row_j
        for (std::size_t t = 0; t < cols; ++t)
            a[i][t] -= q * a[j][t];
        for (std::size_t t = 0; t < rows; ++t)
            res.u[i][t] -= q * res.u[j][t];
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // col_i -= q * col_j
        for (std::size_t t = 0; t < rows; ++t)
            a[t][i] -= q * a[t][j];
        for (std::size_t t = 0; t < cols; ++t)
            res.v[t][i] -= q * res.v[t][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < rows; ++t)
            std::swap(a[t][i], a[t][j]);
        for (std::size_t t = 0; t < cols; ++t)
            std::swap(res.v[t][i], res.v[t][j]);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t t = 0; t < cols; ++t)
            a[i][t] = -a[i][t];
        for (std::size_t t = 0; t < rows; ++t)
            res.u[i][t] = -res.u[i][t];
    };

    const std::size_t lim = std::min(rows, cols);
    for (std::size_t t = 0; t < lim; ++t) {
        // find a nonzero pivot of minimal absolute value
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (pi == rows || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done; // all remaining entries vanish
            if (pi != t)
                row_swap(t, pi);
            if (pj != t)
                col_swap(t, pj);
            if (a[t][t] < 0)
                row_negate(t);

            bool reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(),
                               a[t][t].get_mpz_t());
                    row_op(i, t, q);
                    if (a[i][t] != 0)
                        reduced = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(),
                               a[t][t].get_mpz_t());
                    col_op(j, t, q);
                    if (a[t][j] != 0)
                        reduced = false;
                }
            if (!reduced)
                continue; // smaller remainders appeared; repick the pivot

            // ensure the pivot divides the rest of the block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(),
                                         a[t][t].get_mpz_t())) {
                        row_op(t, i, Int(-1)); // add row i to row t
                        divides_all = false;
                    }
            if (divides_all)
                break;
        }
    }
done:
    res.diag.resize(lim, Int(0));
    res.rank = 0;
    for (std::size_t t = 0; t < lim; ++t) {
        res.diag[t] = a[t][t];
        if (res.diag[t] != 0)
            ++res.rank;
    }
    return res;
}

ZMat integer_kernel(const ZMat& a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    if (a.empty())
        return zmat_identity(cols);
    SmithResult s = smith_normal_form(a);
    // A x = 0 iff D y = 0 with x = V y; free coordinates sit past the rank
    ZMat basis;
    for (std::size_t j = s.rank; j < cols; ++j) {
        std::vector<Int> col(cols);
        for (std::size_t i = 0; i < cols; ++i)
            col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

std::optional<std::vector<Int>> solve_in_lattice(const ZMat& basis_rows,
                                                 const std::vector<Int>& b) {
    // solve w^T * basis_rows = b over Z
    const std::size_t k = basis_rows.size();
    const std::size_t n = b.size();
    ZMat kt(n, std::vector<Int>(k, Int(0))); // columns are the basis rows
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            kt[j][i] = basis_rows[i][j];
    SmithResult s = smith_normal_form(kt);
    // kt w = b  ->  D z = U b with w = V z
    std::vector<Int> ub = zmat_apply(s.u, b);
    std::vector<Int> z(k, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        Int want = i < s.diag.size() ? s.diag[i] : Int(0);
        if (i < k && want != 0) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), want.get_mpz_t()))
                return std::nullopt;
            z[i] = ub[i] / want;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return zmat_apply(s.v, z);
}

Int lattice_index_in_zn(const ZMat& generator_rows, std::size_t dim) {
    ZMat a = generator_rows;
    SmithResult s = smith_normal_form(std::move(a));
    if (s.rank < dim)
        return 0;
    Int idx = 1;
    for (std::size_t i = 0; i < dim; ++i)
        idx *= s.diag[i];
    return abs(idx);
}

std::vector<Int> cokernel_invariants(const ZMat& generator_rows,
                                     std::size_t dim) {
    SmithResult s = smith_normal_form(ZMat(generator_rows));
    std::vector<Int> out;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diag[i] > 1)
            out.push_back(s.diag[i]);
    for (std::size_t i = s.rank; i < dim; ++i)
        out.push_back(0); // free summand
    return out;
}

} // namespace goodred
