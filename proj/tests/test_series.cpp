#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ahdet/perm.hpp"
#include "ahdet/series.hpp"

using namespace ahdet;

TEST_CASE("recurrence coefficients for p=2 match the hand-unrolled values") {
    const auto table = artin_hasse_coefficients(PrimeContext(2), 5);
    const std::vector<Rational> expected = {1,
                                            1,
                                            1,
                                            Rational(2, 3),
                                            Rational(2, 3),
                                            Rational(7, 15)};
    CHECK(table.values() == expected);
}

TEST_CASE("recurrence coefficients for p=3") {
    const auto table = artin_hasse_coefficients(PrimeContext(3), 3);
    CHECK(table.value(2) == Rational(1, 2));
    CHECK(table.value(3) == Rational(1, 2));  // (u_2 + u_0) / 3
}

TEST_CASE("u_0 is 1 for every prime") {
    for (long p : {2L, 3L, 5L, 7L, 11L})
        CHECK(artin_hasse_coefficients(PrimeContext(p), 0).value(0) == Rational(1));
}

TEST_CASE("exp construction low-order values") {
    CHECK(artin_hasse_via_exp(PrimeContext(2), 2).values() ==
          std::vector<Rational>{1, 1, 1});
    CHECK(artin_hasse_via_exp(PrimeContext(3), 2).values() ==
          std::vector<Rational>{1, 1, Rational(1, 2)});
    CHECK(artin_hasse_via_exp(PrimeContext(5), 0).values() == std::vector<Rational>{1});
}

TEST_CASE("the two constructions agree to degree 60") {
    for (long p : {2L, 3L, 5L, 7L}) {
        const PrimeContext ctx(p);
        const auto recurrence = artin_hasse_coefficients(ctx, 60);
        const auto exponential = artin_hasse_via_exp(ctx, 60);
        CHECK(recurrence.values() == exponential.values());
    }
}

TEST_CASE("denominators stay coprime to p") {
    for (long p : {2L, 3L, 5L, 7L}) {
        const auto table = artin_hasse_coefficients(PrimeContext(p), 60);
        for (const Rational& u : table.values()) {
            const Int den = u.den();
            CHECK_FALSE(mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)));
        }
    }
}

TEST_CASE("table construction rejects invariant violations") {
    const PrimeContext two(2);
    CHECK_THROWS_AS(CoefficientTable(two, {}), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientTable(two, {Rational(2)}), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientTable(two, {Rational(1), Rational(1, 2)}),
                    std::invalid_argument);
    // coprime denominator is fine
    CHECK_NOTHROW(CoefficientTable(two, {Rational(1), Rational(1, 3)}));
}

TEST_CASE("with_value replaces one entry and revalidates") {
    const auto table = artin_hasse_coefficients(PrimeContext(2), 5);
    const auto mutated = table.with_value(3, table.value(3) + Rational(1));
    CHECK(mutated.value(3) == Rational(5, 3));
    CHECK(mutated.value(4) == table.value(4));
    CHECK_THROWS_AS(table.with_value(3, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("n! u_n counts p-elements") {
    const PrimeContext two(2);
    CHECK(p_element_count(two, 4) == 16);
    CHECK(p_element_count(two, 5) == 56);
    CHECK(p_element_count(PrimeContext(3), 3) == 3);
    CHECK(p_element_count(two, 0) == 1);

    for (long p : {2L, 3L}) {
        const PrimeContext ctx(p);
        const auto table = artin_hasse_coefficients(ctx, 8);
        for (long n = 0; n <= 8; ++n)
            CHECK(p_element_count(table, n) == p_element_count_bruteforce(ctx, n));
    }
}

TEST_CASE("n! u_n is integral out to n = 40") {
    for (long p : {2L, 3L, 5L}) {
        const auto table = artin_hasse_coefficients(PrimeContext(p), 40);
        for (long n = 0; n <= 40; ++n)
            CHECK((table.value(n) * Rational(factorial(n))).is_integer());
    }
}

TEST_CASE("mod-p residues") {
    const auto table2 = artin_hasse_coefficients(PrimeContext(2), 5);
    CHECK(residues_mod_p(table2) == std::vector<long>{1, 1, 1, 0, 0, 1});
    const auto table3 = artin_hasse_coefficients(PrimeContext(3), 2);
    CHECK(residues_mod_p(table3).back() == 2);  // 1/2 mod 3
    for (long p : {2L, 3L, 5L})
        CHECK(residues_mod_p(artin_hasse_coefficients(PrimeContext(p), 0)).front() == 1);
}

TEST_CASE("kernel slices") {
    const PrimeContext two(2);
    // identity slice equals the full residue sequence
    const auto table = artin_hasse_coefficients(two, 9);
    CHECK(p_kernel_slice(two, 0, 0, 10) == residues_mod_p(table));
    CHECK(p_kernel_slice(two, 1, 1, 3) == std::vector<long>{1, 0, 1});
    CHECK(p_kernel_slice(two, 2, 0, 2) == std::vector<long>{1, 0});
    CHECK(p_kernel_slice(two, 1, 0, 0).empty());

    CHECK_THROWS_AS(p_kernel_slice(two, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(p_kernel_slice(two, 1, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(p_kernel_slice(two, 40, 0, 2), std::invalid_argument);  // size guard
}

TEST_CASE("cartier drops to every p-th coefficient") {
    const PrimeContext two(2);
    const std::vector<Rational> input = {10, 11, 12, 13, 14};
    CHECK(cartier(input, two) == std::vector<Rational>{10, 12, 14});

    const PrimeContext three(3);
    const auto table = artin_hasse_coefficients(three, 9);
    const auto out = cartier(table.values(), three);
    CHECK(out == std::vector<Rational>{table.value(0), table.value(3), table.value(6),
                                       table.value(9)});

    CHECK(cartier(std::vector<Rational>(7), two) == std::vector<Rational>(4));
    CHECK(cartier({}, two).empty());
}

TEST_CASE("operator matrix in the monomial basis") {
    for (long p : {2L, 3L, 5L}) {
        const ExactMatrix m = phi_matrix(PrimeContext(p), 1);
        CHECK(m.rows() == 1);
        CHECK(m(0, 0) == Rational(1));
    }

    const ExactMatrix m2 = phi_matrix(PrimeContext(2), 2);
    CHECK(m2(0, 0) == Rational(1));
    CHECK(m2(0, 1) == Rational(1));  // u_2
    CHECK(m2(1, 0) == Rational(0));
    CHECK(m2(1, 1) == Rational(1));  // u_1

    const ExactMatrix m3 = phi_matrix(PrimeContext(3), 2);
    CHECK(m3(0, 1) == Rational(1, 2));  // u_3
    CHECK(m3(1, 1) == Rational(1, 2));  // u_2

    // column 0 is always (1, 0, 0, ...)
    const ExactMatrix wide = phi_matrix(PrimeContext(3), 5);
    for (std::size_t r = 0; r < wide.rows(); ++r)
        CHECK(wide(r, 0) == (r == 0 ? Rational(1) : Rational(0)));

    CHECK_THROWS_AS(phi_matrix(PrimeContext(2), 0), std::invalid_argument);
}
