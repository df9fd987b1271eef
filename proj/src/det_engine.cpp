#include "ahdet/det_engine.hpp"

#include "ahdet/tableaux.hpp"

namespace ahdet {

namespace {

void require_ell(std::size_t ell) {
    if (ell == 0)
        throw std::invalid_argument("matrix size must be >= 1");
}

CoefficientTable table_for(const PrimeContext& ctx, std::size_t ell) {
    return artin_hasse_coefficients(ctx, ctx.p() * static_cast<long>(ell) - 1);
}

}  // namespace

ExactMatrix coefficient_matrix(const CoefficientTable& table, std::size_t ell) {
    require_ell(ell);
    const long p = table.ctx().p();
    if (p * static_cast<long>(ell) - 1 > table.max_index())
        throw std::invalid_argument("coefficient table too short");
    ExactMatrix m(ell, ell);
    for (std::size_t i = 1; i <= ell; ++i)
        for (std::size_t j = 1; j <= ell; ++j) {
            const long idx = p * static_cast<long>(i) - static_cast<long>(j);
            if (idx >= 0)
                m(i - 1, j - 1) = table.value(idx);
        }
    return m;
}

ExactMatrix coefficient_matrix(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    return coefficient_matrix(table_for(ctx, ell), ell);
}

ExactMatrix binomial_count_matrix(const CoefficientTable& table, std::size_t ell) {
    require_ell(ell);
    const long p = table.ctx().p();
    if (p * static_cast<long>(ell) - 1 > table.max_index())
        throw std::invalid_argument("coefficient table too short");
    ExactMatrix m(ell, ell);
    for (std::size_t i = 1; i <= ell; ++i)
        for (std::size_t j = 1; j <= ell; ++j) {
            const long idx = p * static_cast<long>(i) - static_cast<long>(j);
            if (idx >= 0)
                m(i - 1, j - 1) = Rational(binomial(p * static_cast<long>(i),
                                                    static_cast<long>(j)) *
                                           p_element_count(table, idx));
        }
    return m;
}

ExactMatrix binomial_count_matrix(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    return binomial_count_matrix(table_for(ctx, ell), ell);
}

ExactMatrix binomial_matrix(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    ExactMatrix m(ell, ell);
    for (std::size_t i = 1; i <= ell; ++i)
        for (std::size_t j = 1; j <= ell; ++j)
            m(i - 1, j - 1) =
                Rational(binomial(ctx.p() * static_cast<long>(i), static_cast<long>(j)));
    return m;
}

Rational determinant_closed_form(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    Rational product = 1;
    for (long k = 1; k <= static_cast<long>(ell); ++k)
        product *= Rational(factorial(k) * int_pow(ctx.p(), k), factorial(ctx.p() * k));
    return product;
}

DeterminantReport coefficient_determinant_report(const CoefficientTable& table,
                                                 std::size_t ell) {
    require_ell(ell);
    DeterminantReport report;
    report.p = table.ctx().p();
    report.ell = ell;
    report.determinant = det_exact(coefficient_matrix(table, ell));
    report.closed_form = determinant_closed_form(table.ctx(), ell);
    if (!report.determinant.is_zero())
        report.valuation = ord_p(report.determinant, table.ctx());
    report.matches = report.determinant == report.closed_form;
    return report;
}

DeterminantReport coefficient_determinant_report(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    return coefficient_determinant_report(table_for(ctx, ell), ell);
}

bool check_binomial_det_power(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    const long l = static_cast<long>(ell);
    const Rational det = det_exact(binomial_matrix(ctx, ell));
    const Int expected = int_pow(ctx.p(), l * (l + 1) / 2);
    return det == Rational(expected) &&
           expected == int_pow(ctx.p(), l) * tableaux_count(ctx, l - 1);
}

bool check_binomial_det_equality(const CoefficientTable& table, std::size_t ell) {
    require_ell(ell);
    return det_exact(binomial_count_matrix(table, ell)) ==
           det_exact(binomial_matrix(table.ctx(), ell));
}

bool check_binomial_det_equality(const PrimeContext& ctx, std::size_t ell) {
    require_ell(ell);
    return check_binomial_det_equality(table_for(ctx, ell), ell);
}

bool check_scaling_consistency(const CoefficientTable& table, std::size_t ell) {
    require_ell(ell);
    const long p = table.ctx().p();
    Rational scaling = 1;
    for (long i = 1; i <= static_cast<long>(ell); ++i)
        scaling *= Rational(factorial(p * i), factorial(i));
    return det_exact(binomial_count_matrix(table, ell)) / scaling ==
           det_exact(coefficient_matrix(table, ell));
}

bool check_convolution_determinant(const ExactMatrix& e, const ExactMatrix& x) {
    const std::size_t ell = e.rows();
    if (ell == 0 || e.cols() != ell || x.rows() != ell || x.cols() != ell)
        throw std::invalid_argument("convolution check requires equal square matrices");
    ExactMatrix a(ell, ell);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j) {
            Rational sum = 0;
            for (std::size_t k = 0; k <= i && k < ell; ++k)
                sum += e(j, i - k) * x(i, k);  // E column index i-k+1 (1-indexed)
            a(i, j) = sum;
        }
    Rational rhs = det_exact(e);
    for (std::size_t i = 0; i < ell; ++i)
        rhs *= x(i, 0);
    return det_exact(a) == rhs;
}

bool check_scaled_determinant(const CoefficientTable& table, std::size_t ell,
                              const std::vector<Rational>& alpha,
                              const std::vector<Rational>& beta) {
    require_ell(ell);
    if (alpha.size() != ell || beta.size() != ell)
        throw std::invalid_argument("scaling vectors must have length ell");
    for (std::size_t k = 0; k < ell; ++k)
        if (alpha[k].sign() <= 0 || beta[k].sign() <= 0)
            throw std::invalid_argument("scaling vectors must be strictly positive");
    const long p = table.ctx().p();
    if (p * static_cast<long>(ell) - 1 > table.max_index())
        throw std::invalid_argument("coefficient table too short");

    ExactMatrix lhs(ell, ell);
    for (std::size_t i = 1; i <= ell; ++i)
        for (std::size_t j = 1; j <= ell; ++j) {
            const long idx = p * static_cast<long>(i) - static_cast<long>(j);
            if (idx >= 0)
                lhs(i - 1, j - 1) = alpha[j - 1] * beta[i - 1] * table.value(idx);
        }

    ExactMatrix rhs(ell, ell);  // rows j, columns k
    for (std::size_t j = 1; j <= ell; ++j)
        for (std::size_t k = 1; k <= ell; ++k) {
            const long m = p * static_cast<long>(k) - static_cast<long>(j);
            if (m >= 0)
                rhs(j - 1, k - 1) = alpha[j - 1] * beta[k - 1] * Rational(Int(1), factorial(m));
        }

    return det_exact(lhs) == det_exact(rhs);
}

bool check_phi_consistency(const CoefficientTable& table, std::size_t ell) {
    require_ell(ell);
    const ExactMatrix a = coefficient_matrix(table, ell);
    const ExactMatrix phi = phi_matrix(table, ell + 1);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            if (a(i, j) != phi(j + 1, i + 1))
                return false;
    return true;
}

}  // namespace ahdet
