#include "coincal/smith.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace coincal {

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix s[t.., t..]; false when that submatrix is zero.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            mpz_class a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    SmithDecomposition d;
    d.u = IntMatrix::identity(m);
    d.v = IntMatrix::identity(n);
    d.s = a;

    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d.s, t, pi, pj)) break;  // trailing block is zero
        d.s.swap_rows(t, pi);
        d.u.swap_rows(t, pi);
        d.s.swap_cols(t, pj);
        d.v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot and row t to its right.
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.s(i, t) == 0) continue;
                mpz_class q = d.s(i, t) / d.s(t, t);  // truncated division
                d.s.add_row_multiple(i, t, -q);
                d.u.add_row_multiple(i, t, -q);
                if (d.s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.s(t, j) == 0) continue;
                mpz_class q = d.s(t, j) / d.s(t, t);
                d.s.add_col_multiple(j, t, -q);
                d.v.add_col_multiple(j, t, -q);
                if (d.s(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Some remainder survived; it is smaller than the old pivot,
                // so re-selecting strictly shrinks |pivot| and the loop ends.
                if (!find_pivot(d.s, t, pi, pj)) break;
                d.s.swap_rows(t, pi);
                d.u.swap_rows(t, pi);
                d.s.swap_cols(t, pj);
                d.v.swap_cols(t, pj);
                continue;
            }

            // Pivot is lone; force it to divide the rest of the block.
            bool divides = true;
            std::size_t bi = 0;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d.s(i, j) % d.s(t, t) != 0) {
                        divides = false;
                        bi = i;
                        break;
                    }
            if (divides) break;
            // Fold the offending row into row t; the next pass pivots on a
            // proper divisor of the current pivot.
            d.s.add_row_multiple(t, bi, 1);
            d.u.add_row_multiple(t, bi, 1);
        }

        if (d.s(t, t) < 0) {
            d.s.negate_row(t);
            d.u.negate_row(t);
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (d.s(t, t) != 0) d.factors.push_back(d.s(t, t));

    assert(d.u * a * d.v == d.s);
    return d;
}

std::size_t rank(const IntMatrix& a) {
    return smith_normal_form(a).factors.size();
}

namespace {

// Visit all strictly increasing index vectors of length k drawn from [0, n).
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return false;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool nonzero_minor_exists(const IntMatrix& a, std::size_t k) {
    const std::size_t bound = a.rows() < a.cols() ? a.rows() : a.cols();
    if (k > bound)
        throw std::invalid_argument("nonzero_minor_exists: k exceeds min(rows, cols)");
    if (k == 0) return true;  // empty minor convention

    return for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& ri) {
        return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& ci) {
            return det(a.submatrix(ri, ci)) != 0;
        });
    });
}

}  // namespace coincal
