#include <doctest.h>

#include <random>

#include "dodgson/matrix.hpp"
#include "dodgson/oracle.hpp"
#include "support.hpp"

using namespace dodgson;
using dodgson::testing::example1;
using dodgson::testing::example2;
using dodgson::testing::leibniz_det;

TEST_CASE("construction validates shape and ring") {
    CHECK_THROWS_AS(Matrix(2, 2, {Scalar::integer(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(1, 2, {Scalar::integer(1), Scalar::real(1.0)}), RingMismatch);
    const Matrix a = example1();
    CHECK(a.rows() == 4);
    CHECK(a.is_square());
    CHECK(a.ring() == RingKind::Integer);
    CHECK(a.at(3, 2) == Scalar::integer(5));
    CHECK_THROWS_AS(a.at(4, 0), IndexOutOfRange);
}

TEST_CASE("connected minors") {
    const Matrix a = example1();
    CHECK(connected_minor(a, 0, 0, 2) == Matrix::integers({{4, 2}, {1, 1}}));
    CHECK(connected_minor(a, 0, 0, 4) == a);
    const Matrix def1 = Matrix::integers({{2, 1, -1, -3}, {1, -2, 3, 0}, {3, 1, 2, -1}, {0, -2, 3, 1}});
    CHECK(connected_minor(def1, 0, 0, 2) == Matrix::integers({{2, 1}, {1, -2}}));
    CHECK(connected_minor(a, 2, 1, 2) == Matrix::integers({{-1, 3}, {2, 5}}));
    CHECK_THROWS_AS(connected_minor(a, 3, 0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(connected_minor(a, 0, 0, 0), IndexOutOfRange);
}

TEST_CASE("interior") {
    CHECK(interior(example1()) == Matrix::integers({{1, 2}, {-1, 3}}));
    CHECK(interior(Matrix::integers({{2, 4, 6}, {-1, 5, -8}, {1, -11, 8}})) == Matrix::integers({{5}}));
    CHECK(interior(Matrix::identity(3)) == Matrix::integers({{1}}));
    CHECK_THROWS_AS(interior(Matrix::identity(2)), TooSmall);
}

TEST_CASE("delete_row_col") {
    CHECK(delete_row_col(Matrix::integers({{1, 2}, {3, 4}}), 0, 0) == Matrix::integers({{4}}));
    CHECK(delete_row_col(example1(), 0, 0) == Matrix::integers({{1, 2, 2}, {-1, 3, -1}, {2, 5, 1}}));
    CHECK(delete_row_col(Matrix::identity(3), 1, 1) == Matrix::identity(2));
    CHECK_THROWS_AS(delete_row_col(example1(), 4, 0), IndexOutOfRange);
}

TEST_CASE("adjugate") {
    const DeterminantFn det = [](const Matrix& m) { return leibniz_det(m); };
    // [[a,b],[c,d]] -> [[d,-c],[-b,a]]
    CHECK(adjugate(Matrix::integers({{1, 2}, {3, 4}}), det) == Matrix::integers({{4, -3}, {-2, 1}}));
    CHECK(adjugate(Matrix::identity(3), det) == Matrix::identity(3));
    const Matrix adj = adjugate(example1(), det);
    CHECK(adj(0, 0) * adj(3, 3) - adj(0, 3) * adj(3, 0) == Scalar::integer(-410));
}

TEST_CASE("swaps and scaled additions") {
    const Matrix a = example2();
    const Matrix b = swap_rows(swap_rows(swap_rows(a, 0, 1), 1, 2), 2, 3);
    CHECK(b == Matrix::integers({{-1, 3, 6, -3}, {5, 1, 2, 0}, {-2, 1, -1, 1}, {0, 1, 0, 4}}));
    CHECK(swap_rows(swap_rows(a, 1, 3), 1, 3) == a);
    CHECK(swap_cols(swap_cols(a, 0, 2), 0, 2) == a);
    CHECK(swap_cols(Matrix::integers({{1, 2}}), 0, 1) == Matrix::integers({{2, 1}}));
    CHECK_THROWS_AS(swap_rows(a, 1, 1), IndexOutOfRange);
    CHECK_THROWS_AS(swap_rows(Matrix::integers({{1, 2}}), 0, 1), IndexOutOfRange);

    CHECK(add_scaled_row(a, 0, 1, Scalar::integer(0)) == a);
    const Matrix id = add_scaled_row(Matrix::identity(2), 0, 1, Scalar::integer(1));
    CHECK(id == Matrix::integers({{1, 0}, {1, 1}}));
    CHECK(leibniz_det(id) == Scalar::integer(1));
    CHECK(add_scaled_col(Matrix::identity(2), 1, 0, Scalar::integer(3)) == Matrix::integers({{1, 0}, {3, 1}}));
    CHECK_THROWS_AS(add_scaled_row(a, 0, 0, Scalar::integer(1)), IndexOutOfRange);
    CHECK_THROWS_AS(add_scaled_row(a, 0, 1, Scalar::real(1.0)), RingMismatch);
}

TEST_CASE("interior zero detection") {
    CHECK_FALSE(has_interior_zero(example1()));
    CHECK(has_interior_zero(Matrix::integers({{1, 1, 1}, {1, 0, 1}, {1, 1, 1}})));
    CHECK_FALSE(has_interior_zero(Matrix::integers({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}})));
}

TEST_CASE("matrix properties over random integer matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> size(2, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        const Matrix a = dodgson::testing::random_matrix(n, rng);
        const Scalar d = leibniz_det(a);
        CAPTURE(trial);

        if (n >= 3) CHECK(interior(connected_minor(a, 0, 0, n)) == interior(a));

        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        const std::size_t i = idx(rng);
        const std::size_t j = (i + 1 + idx(rng) % (n - 1)) % n;
        CHECK(leibniz_det(add_scaled_row(a, i, j, Scalar::integer(-3))) == d);
        CHECK(leibniz_det(add_scaled_col(a, j, i, Scalar::integer(2))) == d);
        CHECK(leibniz_det(swap_rows(a, i, j)) == neg(d));
        CHECK(leibniz_det(swap_cols(a, i, j)) == neg(d));

        // Composition: a size-s minor of a size-t minor is a minor of a.
        for (std::size_t t = 1; t <= n; ++t) {
            const std::size_t top = idx(rng) % (n - t + 1), left = idx(rng) % (n - t + 1);
            const Matrix outer = connected_minor(a, top, left, t);
            for (std::size_t s = 1; s <= t; ++s) {
                const std::size_t r = (top + s) % (t - s + 1), c = (left + 2 * s) % (t - s + 1);
                CHECK(connected_minor(outer, r, c, s) == connected_minor(a, top + r, left + c, s));
            }
        }
    }
}
