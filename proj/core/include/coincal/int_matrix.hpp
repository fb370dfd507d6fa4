#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace coincal {

/// Dense matrix over the integers with arbitrary-precision entries,
/// interpreted as a homomorphism Z^cols -> Z^rows.
///
/// Zero rows or zero columns are legal and model the maps from or to the
/// trivial group (the empty-map convention).
class IntMatrix {
public:
    IntMatrix() = default;

    /// rows x cols matrix filled with zeros.
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Build from nested row lists, e.g. {{2, 4}, {6, 8}}. Rows must be
    /// rectangular.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    /// Square diagonal matrix with the given diagonal entries.
    static IntMatrix diagonal(const std::vector<mpz_class>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    mpz_class& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    /// Bounds-checked access; throws std::out_of_range.
    const mpz_class& at(std::size_t i, std::size_t j) const;
    mpz_class& at(std::size_t i, std::size_t j);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMatrix transposed() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const;

    // Elementary row/column operations, used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    /// Submatrix given by row and column index sets (indices strictly
    /// increasing).
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;  // row-major
};

/// Exact determinant via fraction-free (Bareiss) elimination.
/// The empty 0x0 matrix has determinant 1. Throws std::invalid_argument
/// on non-square input.
mpz_class det(const IntMatrix& a);

/// Gcd of all entries, normalized nonnegative; 0 for a zero or empty matrix.
/// Equals the first invariant factor whenever the rank is positive.
mpz_class gcd_entries(const IntMatrix& a);

}  // namespace coincal
