#pragma once

// Test-only helpers. leibniz_det is the independent determinant oracle: a
// plain permutation sum that shares no code with the library's
// determinant routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson::testing {

inline Scalar leibniz_det(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total = a(0, 0).zero_like();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar term = a(0, 0).one_like();
        for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
        total = inversions % 2 == 0 ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Matrix random_matrix(std::size_t n, std::mt19937_64& rng, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(Scalar::integer(dist(rng)));
    return Matrix(n, n, std::move(entries));
}

inline Matrix example1() {
    return Matrix::integers({{4, 2, 0, -3}, {1, 1, 2, 2}, {0, -1, 3, -1}, {1, 2, 5, 1}});
}

inline Matrix example2() {
    return Matrix::integers({{0, 1, 0, 4}, {-1, 3, 6, -3}, {5, 1, 2, 0}, {-2, 1, -1, 1}});
}

inline Scalar poly(std::initializer_list<long> coeffs_low_first) {
    std::vector<mpq_class> c;
    for (long v : coeffs_low_first) c.emplace_back(v);
    return Scalar::polynomial(Polynomial(std::move(c)));
}

}  // namespace dodgson::testing
