#include "dodgson/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dodgson {

namespace {

void require_index(std::size_t i, std::size_t bound, const char* what) {
    if (i >= bound) {
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " out of range [0, " +
                              std::to_string(bound) + ")");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix expects " + std::to_string(rows_ * cols_) + " entries, got " +
                                    std::to_string(entries_.size()));
    }
    const RingKind kind = entries_.front().kind();
    for (const auto& e : entries_) {
        if (e.kind() != kind) throw RingMismatch("matrix entries must share a single ring");
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix needs at least one entry");
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::integers(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : rows) {
        auto& row = out.emplace_back();
        for (long v : r) row.push_back(Scalar::integer(v));
    }
    return from_rows(out);
}

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
    std::vector<Scalar> entries(n * n, one.zero_like());
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = one;
    return Matrix(n, n, std::move(entries));
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    require_index(i, rows_, "row");
    require_index(j, cols_, "column");
    return (*this)(i, j);
}

Matrix connected_minor(const Matrix& a, std::size_t top_row, std::size_t left_col, std::size_t size) {
    if (size == 0) throw IndexOutOfRange("minor size must be at least 1");
    if (top_row + size > a.rows() || left_col + size > a.cols()) {
        throw IndexOutOfRange("connected minor of size " + std::to_string(size) + " at (" +
                              std::to_string(top_row) + ", " + std::to_string(left_col) + ") exceeds " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    std::vector<Scalar> entries;
    entries.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) entries.push_back(a(top_row + i, left_col + j));
    return Matrix(size, size, std::move(entries));
}

Matrix interior(const Matrix& a) {
    if (a.rows() < 3 || a.cols() < 3) {
        throw TooSmall("interior needs at least 3x3, got " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()));
    }
    std::vector<Scalar> entries;
    entries.reserve((a.rows() - 2) * (a.cols() - 2));
    for (std::size_t i = 1; i + 1 < a.rows(); ++i)
        for (std::size_t j = 1; j + 1 < a.cols(); ++j) entries.push_back(a(i, j));
    return Matrix(a.rows() - 2, a.cols() - 2, std::move(entries));
}

Matrix delete_row_col(const Matrix& a, std::size_t i, std::size_t j) {
    if (!a.is_square() || a.rows() < 2) throw TooSmall("delete_row_col needs a square matrix of size >= 2");
    require_index(i, a.rows(), "row");
    require_index(j, a.cols(), "column");
    const std::size_t n = a.rows();
    std::vector<Scalar> entries;
    entries.reserve((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) entries.push_back(a(r, c));
    }
    return Matrix(n - 1, n - 1, std::move(entries));
}

Matrix adjugate(const Matrix& a, const DeterminantFn& det) {
    if (!a.is_square() || a.rows() < 2) throw TooSmall("adjugate needs a square matrix of size >= 2");
    const std::size_t n = a.rows();
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar minor = det(delete_row_col(a, i, j));
            entries.push_back((i + j) % 2 == 0 ? std::move(minor) : neg(minor));
        }
    }
    return Matrix(n, n, std::move(entries));
}

Matrix swap_rows(const Matrix& a, std::size_t i, std::size_t j) {
    require_index(i, a.rows(), "row");
    require_index(j, a.rows(), "row");
    if (i == j) throw IndexOutOfRange("swap_rows needs distinct rows");
    std::vector<Scalar> entries(a.entries().begin(), a.entries().end());
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(entries[i * a.cols() + c], entries[j * a.cols() + c]);
    return Matrix(a.rows(), a.cols(), std::move(entries));
}

Matrix swap_cols(const Matrix& a, std::size_t i, std::size_t j) {
    require_index(i, a.cols(), "column");
    require_index(j, a.cols(), "column");
    if (i == j) throw IndexOutOfRange("swap_cols needs distinct columns");
    std::vector<Scalar> entries(a.entries().begin(), a.entries().end());
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(entries[r * a.cols() + i], entries[r * a.cols() + j]);
    return Matrix(a.rows(), a.cols(), std::move(entries));
}

Matrix add_scaled_row(const Matrix& a, std::size_t src, std::size_t dst, const Scalar& c) {
    require_index(src, a.rows(), "row");
    require_index(dst, a.rows(), "row");
    if (src == dst) throw IndexOutOfRange("add_scaled_row needs distinct rows");
    if (c.kind() != a.ring()) throw RingMismatch("row scale factor must match the matrix ring");
    std::vector<Scalar> entries(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        auto& target = entries[dst * a.cols() + k];
        target = add(target, mul(c, a(src, k)));
    }
    return Matrix(a.rows(), a.cols(), std::move(entries));
}

Matrix add_scaled_col(const Matrix& a, std::size_t src, std::size_t dst, const Scalar& c) {
    require_index(src, a.cols(), "column");
    require_index(dst, a.cols(), "column");
    if (src == dst) throw IndexOutOfRange("add_scaled_col needs distinct columns");
    if (c.kind() != a.ring()) throw RingMismatch("column scale factor must match the matrix ring");
    std::vector<Scalar> entries(a.entries().begin(), a.entries().end());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto& target = entries[r * a.cols() + dst];
        target = add(target, mul(c, a(r, src)));
    }
    return Matrix(a.rows(), a.cols(), std::move(entries));
}

bool has_interior_zero(const Matrix& a) {
    for (std::size_t i = 1; i + 1 < a.rows(); ++i)
        for (std::size_t j = 1; j + 1 < a.cols(); ++j)
            if (is_zero(a(i, j))) return true;
    return false;
}

}  // namespace dodgson
