#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ahdet/det_engine.hpp"
#include "oracle.hpp"

#include <random>

using namespace ahdet;

TEST_CASE("coefficient matrix entries") {
    const PrimeContext two(2);
    const ExactMatrix m = coefficient_matrix(two, 2);
    CHECK(m(0, 0) == Rational(1));        // u_1
    CHECK(m(0, 1) == Rational(1));        // u_0
    CHECK(m(1, 0) == Rational(2, 3));     // u_3
    CHECK(m(1, 1) == Rational(1));        // u_2

    CHECK(coefficient_matrix(PrimeContext(3), 1)(0, 0) == Rational(1, 2));  // u_2

    const ExactMatrix wide = coefficient_matrix(two, 3);
    CHECK(wide(0, 2) == Rational(0));     // u_{-1}
    CHECK_THROWS_AS(coefficient_matrix(two, 0), std::invalid_argument);
}

TEST_CASE("binomial-times-count matrix entries") {
    const PrimeContext two(2);
    CHECK(binomial_count_matrix(two, 1)(0, 0) == Rational(2));  // binom(2,1) * h_1

    const ExactMatrix m = binomial_count_matrix(two, 2);
    CHECK(m(0, 0) == Rational(2));
    CHECK(m(0, 1) == Rational(1));
    CHECK(m(1, 0) == Rational(16));  // binom(4,1) * h_3 = 4 * 4
    CHECK(m(1, 1) == Rational(12));  // binom(4,2) * h_2 = 6 * 2
}

TEST_CASE("binomial-times-count entries factor as (pi)!/j! * u_{pi-j}") {
    for (long p : {2L, 3L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, p * 3);
        const ExactMatrix m = binomial_count_matrix(table, 3);
        for (long i = 1; i <= 3; ++i)
            for (long j = 1; j <= 3; ++j) {
                const long idx = p * i - j;
                const Rational u = idx >= 0 ? table.value(idx) : Rational(0);
                CHECK(m(i - 1, j - 1) ==
                      Rational(factorial(p * i), factorial(j)) * u);
            }
    }
}

TEST_CASE("binomial matrix and its determinant") {
    const PrimeContext two(2);
    const ExactMatrix m = binomial_matrix(two, 2);
    CHECK(m(0, 0) == Rational(2));
    CHECK(m(0, 1) == Rational(1));
    CHECK(m(1, 0) == Rational(4));
    CHECK(m(1, 1) == Rational(6));
    CHECK(binomial_matrix(PrimeContext(3), 1)(0, 0) == Rational(3));
    CHECK(det_exact(binomial_matrix(two, 3)) == Rational(64));
}

TEST_CASE("closed form of the coefficient determinant") {
    const PrimeContext two(2);
    CHECK(determinant_closed_form(two, 1) == Rational(1));
    CHECK(determinant_closed_form(two, 2) == Rational(1, 3));
    CHECK(determinant_closed_form(two, 3) == Rational(1, 45));
}

TEST_CASE("determinant reports on the documented instances") {
    const auto r22 = coefficient_determinant_report(PrimeContext(2), 2);
    CHECK(r22.determinant == Rational(1, 3));
    CHECK(r22.closed_form == Rational(1, 3));
    CHECK(r22.valuation == 0);
    CHECK(r22.matches);

    const auto r31 = coefficient_determinant_report(PrimeContext(3), 1);
    CHECK(r31.determinant == Rational(1, 2));
    CHECK(r31.matches);

    const auto r23 = coefficient_determinant_report(PrimeContext(2), 3);
    CHECK(r23.determinant == Rational(1, 45));
    CHECK(r23.valuation == 0);
}

TEST_CASE("determinant equals closed form across the full grid") {
    const std::vector<std::pair<long, std::size_t>> grid = {{2, 8}, {3, 6}, {5, 4}};
    for (const auto& [p, max_ell] : grid) {
        const PrimeContext ctx(p);
        for (std::size_t ell = 1; ell <= max_ell; ++ell) {
            const auto report = coefficient_determinant_report(ctx, ell);
            CHECK(report.matches);
            CHECK(report.valuation == 0);
        }
    }
}

TEST_CASE("binomial determinant is the announced power of p") {
    CHECK(check_binomial_det_power(PrimeContext(2), 1));
    CHECK(check_binomial_det_power(PrimeContext(2), 2));   // det = 8
    CHECK(check_binomial_det_power(PrimeContext(3), 2));   // det [[3,3],[6,15]] = 27
    for (std::size_t ell = 1; ell <= 6; ++ell)
        CHECK(check_binomial_det_power(PrimeContext(2), ell));
}

TEST_CASE("the two binomial-matrix determinants coincide") {
    CHECK(check_binomial_det_equality(PrimeContext(2), 1));  // 2*h_1 = 2
    CHECK(check_binomial_det_equality(PrimeContext(3), 1));  // 3*h_2 = 3
    for (long p : {2L, 3L})
        for (std::size_t ell = 1; ell <= 4; ++ell)
            CHECK(check_binomial_det_equality(PrimeContext(p), ell));
}

TEST_CASE("row/column scaling connects the two determinants") {
    for (long p : {2L, 3L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, p * 5);
        for (std::size_t ell = 1; ell <= 5; ++ell)
            CHECK(check_scaling_consistency(table, ell));
    }
}

TEST_CASE("convolution determinant factorization") {
    // ell = 1: a single product
    ExactMatrix e1(1, 1), x1(1, 1);
    e1(0, 0) = Rational(3, 7);
    x1(0, 0) = Rational(-2, 5);
    CHECK(check_convolution_determinant(e1, x1));

    // X with first column 1 and zero elsewhere reduces both sides to det(E)
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t ell = 2 + trial % 3;
        ExactMatrix e = test::rand_matrix(rng, ell);
        ExactMatrix x(ell, ell);
        for (std::size_t i = 0; i < ell; ++i)
            x(i, 0) = Rational(1);
        CHECK(check_convolution_determinant(e, x));
    }

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ell = 1 + trial % 5;
        CHECK(check_convolution_determinant(test::rand_matrix(rng, ell),
                                            test::rand_matrix(rng, ell)));
    }

    CHECK_THROWS_AS(check_convolution_determinant(ExactMatrix(2, 2), ExactMatrix(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("scaled determinant identity, all-ones instance computed by hand") {
    const PrimeContext two(2);
    const auto table = artin_hasse_coefficients(two, 3);
    const std::vector<Rational> ones = {1, 1};
    CHECK(check_scaled_determinant(table, 2, ones, ones));
    // the right-hand matrix is [[1, 1/6], [1, 1/2]] with determinant 1/3
}

TEST_CASE("scaled determinant identity at ell = 1 is the unit coefficient") {
    for (long p : {2L, 3L, 5L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, p);
        CHECK(table.value(p - 1) == Rational(Int(1), factorial(p - 1)));
        CHECK(check_scaled_determinant(table, 1, {Rational(4, 3)}, {Rational(7, 2)}));
    }
}

TEST_CASE("scaled determinant identity on random positive scalings") {
    std::mt19937_64 rng(19);
    for (long p : {2L, 3L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, p * 4);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t ell = 1 + trial % 4;
            std::vector<Rational> alpha(ell), beta(ell);
            for (std::size_t k = 0; k < ell; ++k) {
                alpha[k] = Rational(test::rand_range(rng, 1, 9), test::rand_range(rng, 1, 9));
                beta[k] = Rational(test::rand_range(rng, 1, 9), test::rand_range(rng, 1, 9));
            }
            CHECK(check_scaled_determinant(table, ell, alpha, beta));
        }
    }
}

TEST_CASE("scaled determinant rejects non-positive scalings") {
    const PrimeContext two(2);
    const auto table = artin_hasse_coefficients(two, 3);
    CHECK_THROWS_AS(check_scaled_determinant(table, 2, {Rational(0), Rational(1)},
                                             {Rational(1), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_scaled_determinant(table, 2, {Rational(1), Rational(1)},
                                             {Rational(-1, 2), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("coefficient matrix is the trimmed transpose of the operator matrix") {
    for (long p : {2L, 3L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, p * 6);
        for (std::size_t ell = 1; ell <= 5; ++ell)
            CHECK(check_phi_consistency(table, ell));
    }
}

TEST_CASE("a perturbed coefficient breaks the determinant identity") {
    const PrimeContext two(2);
    const auto table = artin_hasse_coefficients(two, 8);
    const auto mutated = table.with_value(3, table.value(3) + Rational(1));
    CHECK_FALSE(coefficient_determinant_report(mutated, 2).matches);
    CHECK(coefficient_determinant_report(table, 2).matches);
}
