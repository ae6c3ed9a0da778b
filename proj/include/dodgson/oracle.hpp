#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dodgson/condense.hpp"
#include "dodgson/matrix.hpp"

namespace dodgson {

/// Laplace expansion along the first row, no zero skipping. Per k x k
/// expansion: k multiplications and k - 1 additions; 1x1 is free.
Scalar cofactor_det(const Matrix& a, OpCount& ops);
Scalar cofactor_det(const Matrix& a);

/// One-step fraction-free (Bareiss) elimination with row pivoting on zero
/// pivots. Each update costs 2 mults, 1 subtraction and 1 exact division.
Scalar bareiss_det(const Matrix& a, OpCount& ops);
Scalar bareiss_det(const Matrix& a);

/// Multiplications used by cofactor_det on an n x n matrix:
/// M(1) = 0, M(n) = n * (M(n-1) + 1).
std::uint64_t cofactor_mult_count(std::size_t n);

/// Both sides of the corner (m = 2) Jacobi identity
///   det [[a'_11, a'_1n], [a'_n1, a'_nn]] == det(A) * det(interior(A)),
/// with every determinant taken by bareiss_det.
struct JacobiReport {
    Scalar adjugate_minor_det;
    Scalar det;
    Scalar interior_det;
    Scalar rhs;
    bool holds;
};

/// Throws TooSmall for n < 3 and std::invalid_argument unless m == 2.
JacobiReport jacobi_identity(const Matrix& a, std::size_t m = 2);
bool jacobi_check(const Matrix& a, std::size_t m = 2);

/// Uniform draw from [lo, hi] by rejection on the raw engine output, so the
/// sequence depends only on the seed and not on the standard library.
long uniform_int(std::mt19937_64& rng, long lo, long hi);

/// n x n integer matrix with entries uniform in [lo, hi].
Matrix random_integer_matrix(std::size_t n, std::mt19937_64& rng, long lo = -9, long hi = 9);

/// Mean operation counts of condensation versus cofactor expansion over
/// random clean-path matrices.
struct RatioReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    double condensation_ops = 0;  // mean mults + divs
    double cofactor_ops = 0;      // mean mults
    double ratio = 0;
    std::size_t regenerated = 0;  // matrices discarded because they needed mitigation
    OpCount condensation_total;
    OpCount cofactor_total;
};

/// Matrices that need any mitigation or restart are redrawn, so the report
/// reflects the clean path. Deterministic in (n, trials, seed).
RatioReport count_ratio(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Aligned table: n, trials, condensation ops, cofactor ops, ratio, regenerated.
std::string format_ratio_table(const std::vector<RatioReport>& rows);

}  // namespace dodgson
