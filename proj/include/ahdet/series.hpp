#pragma once

#include "ahdet/matrix.hpp"
#include "ahdet/rational.hpp"

#include <vector>

namespace ahdet {

/*
 * Coefficients u_0..u_N of the Artin-Hasse exponential
 *
 *     E(x) = exp(sum_{k>=0} x^{p^k} / p^k) = sum_n u_n x^n,
 *
 * which are p-adic integers: every denominator is coprime to p. That claim
 * is checked on construction, along with u_0 = 1. n! * u_n is the number of
 * p-elements of the symmetric group S_n.
 */
class CoefficientTable {
public:
    CoefficientTable(const PrimeContext& ctx, std::vector<Rational> values);

    const PrimeContext& ctx() const { return ctx_; }
    long max_index() const { return static_cast<long>(values_.size()) - 1; }
    const Rational& value(long n) const { return values_.at(static_cast<std::size_t>(n)); }
    const std::vector<Rational>& values() const { return values_; }

    // Copy with one coefficient replaced (used for fault injection in the
    // verification harness). Re-validates the table invariants.
    CoefficientTable with_value(long n, const Rational& v) const;

private:
    PrimeContext ctx_;
    std::vector<Rational> values_;
};

// Primary generator, from the recurrence n*u_n = sum_{p^i <= n} u_{n - p^i}.
CoefficientTable artin_hasse_coefficients(const PrimeContext& ctx, long max_n);

// Independent construction: truncated Taylor composition
// E = sum_m S^m / m! with S = sum_{p^k <= N} x^{p^k}/p^k.
// Must agree with artin_hasse_coefficients entry for entry.
CoefficientTable artin_hasse_via_exp(const PrimeContext& ctx, long max_n);

// n! * u_n; errors out if the result is not a nonnegative integer, since that
// would mean an arithmetic bug upstream.
Int p_element_count(const CoefficientTable& table, long n);
Int p_element_count(const PrimeContext& ctx, long n);

// Coefficients reduced mod p (denominator inverted mod p).
std::vector<long> residues_mod_p(const CoefficientTable& table);

// First `count` terms of (u_{p^i * n + j} mod p)_{n>=0}, for 0 <= j < p^i.
std::vector<long> p_kernel_slice(const PrimeContext& ctx, long i, long j, long count);

// Coefficient extraction sum a_n x^n -> sum a_{pn} x^n.
std::vector<Rational> cartier(const std::vector<Rational>& coeffs, const PrimeContext& ctx);

// Matrix of the operator f -> (Cartier of E*f) in the basis {1, x, x^2, ...}:
// entry (r, c) is u_{pc - r}, zero below the diagonal band.
ExactMatrix phi_matrix(const CoefficientTable& table, std::size_t size);
ExactMatrix phi_matrix(const PrimeContext& ctx, std::size_t size);

}  // namespace ahdet
