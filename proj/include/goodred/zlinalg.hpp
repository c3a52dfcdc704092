#ifndef GOODRED_ZLINALG_HPP
#define GOODRED_ZLINALG_HPP

#include <optional>
#include <vector>

#include "goodred/sarith.hpp"

namespace goodred {

/* Dense integer matrix, row major. */
using ZMat = std::vector<std::vector<Int>>;

ZMat zmat_identity(std::size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
std::vector<Int> zmat_apply(const ZMat& a, const std::vector<Int>& x);
bool zmat_equal(const ZMat& a, const ZMat& b);
Int zmat_det(ZMat a);

/* U·A·V = D with U, V unimodular and D diagonal, each diagonal entry
 * nonnegative and dividing the next. */
struct SmithResult {
    std::vector<Int> diag; // min(rows, cols) entries
    ZMat u, v;
    std::size_t rank; // number of nonzero diagonal entries
};

SmithResult smith_normal_form(ZMat a);

/* Basis (as rows) of the lattice {x ∈ Z^cols : A·x = 0}. */
ZMat integer_kernel(const ZMat& a);

/* The unique integer solution of K^T·w = b for a kernel-basis matrix K
 * whose rows are independent; nullopt when b is outside the span. */
std::optional<std::vector<Int>> solve_in_lattice(const ZMat& basis_rows,
                                                 const std::vector<Int>& b);

/* |det| of the full-rank lattice spanned by the given generator rows in
 * Z^dim, i.e. its index in Z^dim; 0 when the rank is deficient. */
Int lattice_index_in_zn(const ZMat& generator_rows, std::size_t dim);

/* Elementary divisors > 1 of Z^n / (lattice spanned by generator rows),
 * with n implied by the row length; includes 0 entries for free part. */
std::vector<Int> cokernel_invariants(const ZMat& generator_rows,
                                     std::size_t dim);

} // namespace goodred

#endif
