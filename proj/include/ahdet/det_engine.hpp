#pragma once

#include "ahdet/matrix.hpp"
#include "ahdet/series.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ahdet {

/*
 * The central identity this library machine-checks:
 *
 *     det( u_{pi-j} )_{1<=i,j<=l} = prod_{k=1}^{l} k! p^k / (pk)!
 *
 * with u_n = 0 for n < 0, and the right-hand side a p-adic unit.
 */
struct DeterminantReport {
    long p = 0;
    std::size_t ell = 0;
    Rational determinant;
    Rational closed_form;
    std::optional<long> valuation;  // ord_p(determinant); empty if determinant is 0
    bool matches = false;
};

// Entry (i, j), 1-indexed, is u_{pi - j} (zero for negative index).
ExactMatrix coefficient_matrix(const CoefficientTable& table, std::size_t ell);
ExactMatrix coefficient_matrix(const PrimeContext& ctx, std::size_t ell);

// Entry (i, j) is binom(pi, j) * h_{pi-j} with h from the coefficient table.
ExactMatrix binomial_count_matrix(const CoefficientTable& table, std::size_t ell);
ExactMatrix binomial_count_matrix(const PrimeContext& ctx, std::size_t ell);

// Entry (i, j) is binom(pi, j).
ExactMatrix binomial_matrix(const PrimeContext& ctx, std::size_t ell);

// prod_{k=1}^{l} k! p^k / (pk)!
Rational determinant_closed_form(const PrimeContext& ctx, std::size_t ell);

// Compares det(coefficient_matrix) against the closed form and records the
// p-adic valuation. A mismatch is reported, never thrown.
DeterminantReport coefficient_determinant_report(const CoefficientTable& table,
                                                 std::size_t ell);
DeterminantReport coefficient_determinant_report(const PrimeContext& ctx, std::size_t ell);

// det(binomial_matrix) == p^{l(l+1)/2} == p^l * |T_{l-1}|.
bool check_binomial_det_power(const PrimeContext& ctx, std::size_t ell);

// det(binomial_count_matrix) == det(binomial_matrix).
bool check_binomial_det_equality(const CoefficientTable& table, std::size_t ell);
bool check_binomial_det_equality(const PrimeContext& ctx, std::size_t ell);

// det(binomial_count_matrix) / prod_i ((pi)!/i!) == det(coefficient_matrix).
bool check_scaling_consistency(const CoefficientTable& table, std::size_t ell);

// The determinant factorization behind the reduction: for matrices E, X,
//   det( sum_k E_{j,i-k+1} X_{i,k} )_{i,j} == det(E) * prod_i X_{i,1},
// with E at column indices < 1 read as zero. Checked on concrete rationals.
bool check_convolution_determinant(const ExactMatrix& e, const ExactMatrix& x);

// Scaled form of the main identity: for positive alpha_j, beta_i,
//   det( alpha_j beta_i u_{pi-j} )_{i,j} == det( alpha_j beta_k / (pk-j)! )_{j,k}
// with 1/m! = 0 for m < 0.
bool check_scaled_determinant(const CoefficientTable& table, std::size_t ell,
                              const std::vector<Rational>& alpha,
                              const std::vector<Rational>& beta);

// coefficient_matrix(l) equals the transpose of phi_matrix(l+1) with the
// index-0 row and column removed.
bool check_phi_consistency(const CoefficientTable& table, std::size_t ell);

}  // namespace ahdet
