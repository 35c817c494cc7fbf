#pragma once

#include <string>
#include <vector>
#include <gmpxx.h>

namespace clv {

using Int = mpz_class;

// Dense integer matrix, row major.  Empty shapes (0 x n, n x 0) are legal.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void scale_row(int r, const Int& s);
    void scale_col(int c, const Int& s);
    void add_row_multiple(int dst, int src, const Int& s);   // row dst += s * row src
    void add_col_multiple(int dst, int src, const Int& s);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/*
 * Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
 * d1 | d2 | ... , all di >= 0.  Pivot selection takes the smallest nonzero
 * absolute value, which keeps intermediate entries from exploding; all
 * arithmetic is exact.
 */
struct SnfResult {
    IntMatrix d, u, v;
    int rank = 0;                        // number of nonzero diagonal entries
    std::vector<Int> invariant_factors;  // the nonzero di in order
};

SnfResult smith_normal_form(const IntMatrix& a);

// Signed determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// Rank over Q; independent of the SNF path except for the shared integers.
int rational_rank(const IntMatrix& a);

/*
 * Sparse text exchange format:
 *
 *   rows R cols C
 *   r c value        # one triple per nonzero entry, 0-based indices
 *
 * Printing emits entries in row-major order.
 */
std::string print_mtx(const IntMatrix& a);
IntMatrix parse_mtx(std::istream& in);

} // namespace clv
