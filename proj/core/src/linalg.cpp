#include "clv/linalg.hpp"

#include <istream>
#include <sstream>

#include "clv/errors.hpp"

namespace clv {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw invalid_input("matrix product: shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += a * o.at(k, c);
        }
    return out;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::scale_row(int r, const Int& s) {
    for (int c = 0; c < cols_; ++c) at(r, c) *= s;
}

void IntMatrix::scale_col(int c, const Int& s) {
    for (int r = 0; r < rows_; ++r) at(r, c) *= s;
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& s) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += s * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& s) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += s * at(r, src);
}

namespace {

/*
 * One extended-gcd elimination between the pivot lane t and lane x (rows of
 * d/u when rows=true, else columns of d/v).  Computes g = gcd(a,b) with
 * s*a + w*b = g and applies the unimodular 2x2 transform
 *
 *     [ lane_t ]   [   s      w   ] [ lane_t ]
 *     [ lane_x ] = [ -b/g    a/g  ] [ lane_x ]
 *
 * so the pivot becomes g and the entry at lane x dies in one pass.  Doing
 * this in a single combined update (instead of a subtract-and-swap Euclid
 * loop) is what keeps intermediate entries from exploding.
 */
void bezout_step(IntMatrix& d, IntMatrix& transform, bool rows, int t, int x, Int a, Int b) {
    Int g, s, w;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int alpha = a / g, beta = b / g;
    auto combine = [&](IntMatrix& m) {
        if (rows) {
            for (int c = 0; c < m.cols(); ++c) {
                Int top = s * m.at(t, c) + w * m.at(x, c);
                Int bot = alpha * m.at(x, c) - beta * m.at(t, c);
                m.at(t, c) = std::move(top);
                m.at(x, c) = std::move(bot);
            }
        } else {
            for (int r = 0; r < m.rows(); ++r) {
                Int left = s * m.at(r, t) + w * m.at(r, x);
                Int right = alpha * m.at(r, x) - beta * m.at(r, t);
                m.at(r, t) = std::move(left);
                m.at(r, x) = std::move(right);
            }
        }
    };
    combine(d);
    combine(transform);
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    SnfResult res;
    res.d = a;
    res.u = IntMatrix::identity(a.rows());
    res.v = IntMatrix::identity(a.cols());
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const int n = std::min(a.rows(), a.cols());
    int t = 0;
    for (; t < n; ++t) {
        // Smallest nonzero |entry| in the remaining block.
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < d.rows(); ++r)
            for (int c = t; c < d.cols(); ++c) {
                if (d.at(r, c) == 0) continue;
                Int mag = abs(d.at(r, c));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break; // remaining block is zero

        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        /*
         * Clear row t by column steps, then column t by row steps.  A simple
         * division step in the row phase touches only column t (the pivot
         * row's tail is already clear), so it cannot refill the row; only a
         * gcd step refills it, and every gcd step strictly shrinks |pivot|.
         * Hence the outer loop terminates.
         */
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int c = t + 1; c < d.cols(); ++c) {
                const Int& b = d.at(t, c);
                if (b == 0) continue;
                if (b % d.at(t, t) == 0) {
                    Int q = b / d.at(t, t);
                    d.add_col_multiple(c, t, -q);
                    v.add_col_multiple(c, t, -q);
                } else {
                    bezout_step(d, v, false, t, c, d.at(t, t), b);
                }
            }
            for (int r = t + 1; r < d.rows(); ++r) {
                const Int& b = d.at(r, t);
                if (b == 0) continue;
                if (b % d.at(t, t) == 0) {
                    Int q = b / d.at(t, t);
                    d.add_row_multiple(r, t, -q);
                    u.add_row_multiple(r, t, -q);
                } else {
                    bezout_step(d, u, true, t, r, d.at(t, t), b);
                    clean = false; // the gcd step refilled row t
                }
            }
        }

        // Divisibility: the pivot must divide every remaining entry.  When it
        // does not, folding the offending column into column t re-runs the
        // reduction, and the gcd step shrinks the pivot strictly.
        bool divides = true;
        for (int r = t + 1; r < d.rows() && divides; ++r)
            for (int c = t + 1; c < d.cols() && divides; ++c)
                if (d.at(r, c) % d.at(t, t) != 0) {
                    d.add_col_multiple(t, c, 1);
                    v.add_col_multiple(t, c, 1);
                    divides = false;
                }
        if (!divides) {
            --t;
            continue;
        }

        if (d.at(t, t) < 0) {
            d.scale_row(t, -1);
            u.scale_row(t, -1);
        }
    }

    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++res.rank;
    for (int i = 0; i < res.rank; ++i) res.invariant_factors.push_back(d.at(i, i));
    return res;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw invalid_input("determinant: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Int num = m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c);
                m.at(r, c) = num / prev; // exact by the Bareiss identity
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int rational_rank(const IntMatrix& a) {
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
    int rank = 0;
    for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < a.rows(); ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int cc = c; cc < a.cols(); ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::string print_mtx(const IntMatrix& a) {
    std::ostringstream os;
    os << "rows " << a.rows() << " cols " << a.cols() << "\n";
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != 0) os << r << " " << c << " " << a.at(r, c) << "\n";
    return os.str();
}

IntMatrix parse_mtx(std::istream& in) {
    std::string word;
    int rows, cols;
    if (!(in >> word >> rows) || word != "rows" || !(in >> word >> cols) || word != "cols")
        throw invalid_input("matrix header must be 'rows R cols C'");
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix shape");
    IntMatrix m(rows, cols);
    int r, c;
    std::string value;
    while (in >> r >> c >> value) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw invalid_input("matrix entry out of range");
        if (mpz_set_str(m.at(r, c).get_mpz_t(), value.c_str(), 10) != 0)
            throw invalid_input("bad matrix entry '" + value + "'");
    }
    return m;
}

} // namespace clv
