#pragma once

#include <cstddef>
#include <vector>

#include "coincal/int_matrix.hpp"

namespace coincal {

/// Smith normal form u * a * v = s of an integer matrix a.
///
/// u (rows x rows) and v (cols x cols) are unimodular, s (rows x cols) is
/// diagonal with nonnegative entries, and `factors` lists the positive
/// diagonal entries of s; each factor divides the next.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix v;
    IntMatrix s;
    std::vector<mpz_class> factors;
};

/// Diagonalize by alternating row/column reduction, always pivoting on the
/// nonzero entry of least absolute value in the trailing submatrix.
/// Total on every matrix, including ones with zero rows or columns.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Rank over Z (and over Q): the number of invariant factors.
std::size_t rank(const IntMatrix& a);

/// True iff some k x k submatrix of a has nonzero determinant.
/// k = 0 counts as true (empty minor). Throws std::invalid_argument when
/// k > min(rows, cols).
///
/// Searches submatrices directly, so it stays an independent route to the
/// rank; cost grows with binomial(rows, k) * binomial(cols, k).
bool nonzero_minor_exists(const IntMatrix& a, std::size_t k);

}  // namespace coincal
