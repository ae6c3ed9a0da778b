#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "dodgson/ring.hpp"

namespace dodgson {

/// Dense, immutable, row-major matrix of scalars from a single ring.
/// Every operation below returns a new matrix; nothing mutates in place.
class Matrix {
public:
    /// Throws std::invalid_argument on empty dimensions or a size mismatch,
    /// RingMismatch when entries come from different rings.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Convenience for fixtures: an integer matrix from literal rows.
    static Matrix integers(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix identity(std::size_t n, const Scalar& one = Scalar::integer(1));

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    RingKind ring() const noexcept { return entries_.front().kind(); }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    /// Bounds-checked access; throws IndexOutOfRange.
    const Scalar& at(std::size_t i, std::size_t j) const;

    std::span<const Scalar> entries() const noexcept { return entries_; }
    std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Determinant routine accepted by operations that need one (adjugate).
using DeterminantFn = std::function<Scalar(const Matrix&)>;

/// size x size submatrix on contiguous rows [top_row, top_row + size) and
/// columns [left_col, left_col + size).
Matrix connected_minor(const Matrix& a, std::size_t top_row, std::size_t left_col, std::size_t size);

/// The matrix with its first and last rows and columns removed.
/// Throws TooSmall if either dimension is below 3.
Matrix interior(const Matrix& a);

/// Square matrix without row i and column j (0-based).
Matrix delete_row_col(const Matrix& a, std::size_t i, std::size_t j);

/// Entrywise signed-minor matrix, a'(i,j) = (-1)^(i+j) * det(a without row i,
/// column j). No transpose is applied, so this is the transpose of the
/// classical adjugate; the sign parity is the same in 0- and 1-based indexing.
Matrix adjugate(const Matrix& a, const DeterminantFn& det);

Matrix swap_rows(const Matrix& a, std::size_t i, std::size_t j);
Matrix swap_cols(const Matrix& a, std::size_t i, std::size_t j);

/// Row dst += c * row src. Determinant preserving.
Matrix add_scaled_row(const Matrix& a, std::size_t src, std::size_t dst, const Scalar& c);
/// Column dst += c * column src. Determinant preserving.
Matrix add_scaled_col(const Matrix& a, std::size_t src, std::size_t dst, const Scalar& c);

/// True when any entry of the interior tests zero.
bool has_interior_zero(const Matrix& a);

}  // namespace dodgson
