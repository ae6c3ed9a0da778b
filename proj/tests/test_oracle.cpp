#include <doctest.h>

#include <random>

#include "dodgson/oracle.hpp"
#include "support.hpp"

using namespace dodgson;
using dodgson::testing::example1;
using dodgson::testing::example2;
using dodgson::testing::leibniz_det;

TEST_CASE("reference determinants on the worked examples") {
    CHECK(cofactor_det(example1()) == Scalar::integer(-82));
    CHECK(bareiss_det(example1()) == Scalar::integer(-82));
    CHECK(cofactor_det(example2()) == Scalar::integer(-163));
    CHECK(bareiss_det(example2()) == Scalar::integer(-163));
    CHECK(cofactor_det(Matrix::integers({{7}})) == Scalar::integer(7));
    CHECK(bareiss_det(Matrix::integers({{0, 1}, {1, 0}})) == Scalar::integer(-1));
    CHECK(bareiss_det(Matrix::integers({{0, 0, 1}, {0, 0, 2}, {3, 4, 5}})) == Scalar::integer(0));
    CHECK_THROWS_AS(cofactor_det(Matrix::integers({{1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(bareiss_det(Matrix::integers({{1, 2}})), std::invalid_argument);
}

TEST_CASE("reference determinants agree with each other and with the permutation sum") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < (n <= 6 ? 20 : 3); ++trial) {
            const Matrix a = dodgson::testing::random_matrix(n, rng, -5, 5);
            CAPTURE(n);
            const Scalar b = bareiss_det(a);
            CHECK(cofactor_det(a) == b);
            if (n <= 6) CHECK(leibniz_det(a) == b);
        }
    }
}

TEST_CASE("bareiss over polynomials") {
    const Scalar x = Scalar::polynomial(Polynomial::x());
    const Scalar one = Scalar::polynomial(Polynomial::constant(1));
    const Scalar zero = Scalar::polynomial(Polynomial{});
    const Matrix m = Matrix::from_rows({{x, one, zero}, {one, x, one}, {zero, one, x}});
    CHECK(bareiss_det(m) == leibniz_det(m));
    CHECK(cofactor_det(m) == leibniz_det(m));
}

TEST_CASE("cofactor multiplication counter follows its recurrence") {
    CHECK(cofactor_mult_count(1) == 0);
    CHECK(cofactor_mult_count(2) == 2);
    CHECK(cofactor_mult_count(3) == 9);
    CHECK(cofactor_mult_count(4) == 40);
    CHECK(cofactor_mult_count(5) == 205);
    std::mt19937_64 rng(1);
    std::uint64_t m_prev = 0, a_prev = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        const std::uint64_t m_n = n == 1 ? 0 : n * (m_prev + 1);
        const std::uint64_t a_n = n == 1 ? 0 : n * a_prev + (n - 1);
        OpCount ops;
        cofactor_det(dodgson::testing::random_matrix(n, rng), ops);
        CHECK(ops.mults == m_n);
        CHECK(ops.adds == a_n);
        CHECK(ops.divs == 0);
        CHECK(cofactor_mult_count(n) == m_n);
        m_prev = m_n;
        a_prev = a_n;
    }
}

TEST_CASE("corner Jacobi identity") {
    const JacobiReport r = jacobi_identity(example1());
    CHECK(r.adjugate_minor_det == Scalar::integer(-410));
    CHECK(r.det == Scalar::integer(-82));
    CHECK(r.interior_det == Scalar::integer(5));
    CHECK(r.holds);
    CHECK(jacobi_check(Matrix::identity(3)));
    CHECK_THROWS_AS(jacobi_identity(Matrix::identity(2)), TooSmall);
    CHECK_THROWS_AS(jacobi_identity(example1(), 3), std::invalid_argument);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = dodgson::testing::random_matrix(4 + static_cast<std::size_t>(trial % 2), rng);
        if (trial % 3 == 1) {
            // Singular: the last row repeats the first.
            std::vector<std::vector<Scalar>> rows;
            for (std::size_t i = 0; i < a.rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());
            rows.back() = rows.front();
            a = Matrix::from_rows(rows);
            CHECK(bareiss_det(a) == Scalar::integer(0));
        }
        CHECK(jacobi_check(a));
    }
}

TEST_CASE("seeded uniform draws") {
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 100; ++i) {
        const long v = uniform_int(a, -9, 9);
        CHECK(v >= -9);
        CHECK(v <= 9);
        CHECK(v == uniform_int(b, -9, 9));
    }
    CHECK_THROWS_AS(uniform_int(a, 3, 2), std::invalid_argument);
}

TEST_CASE("operation-count ratio") {
    const RatioReport r5 = count_ratio(5, 20, 42);
    CHECK(r5.condensation_ops == 74.0);
    CHECK(r5.cofactor_ops == 205.0);
    CHECK(r5.ratio <= 0.6);
    CHECK(r5.ratio == doctest::Approx(74.0 / 205.0));

    const RatioReport r3 = count_ratio(3, 5, 1);
    CHECK(r3.condensation_ops == 11.0);
    CHECK(r3.cofactor_ops == 9.0);

    const RatioReport again = count_ratio(5, 20, 42);
    CHECK(again.regenerated == r5.regenerated);
    CHECK(again.condensation_total == r5.condensation_total);
    CHECK(format_ratio_table({r5}) == format_ratio_table({again}));

    CHECK_THROWS_AS(count_ratio(2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_ratio(4, 0, 1), std::invalid_argument);

    double previous = 10.0;
    for (std::size_t n = 3; n <= 6; ++n) {
        const double ratio = count_ratio(n, 5, 42).ratio;
        CHECK(ratio < previous);
        previous = ratio;
    }
}
