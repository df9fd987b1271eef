#include "ahdet/series.hpp"

namespace ahdet {

namespace {

void validate_table(const PrimeContext& ctx, const std::vector<Rational>& values) {
    if (values.empty())
        throw std::invalid_argument("coefficient table must contain u_0");
    if (values[0] != Rational(1))
        throw std::invalid_argument("coefficient table invariant violated: u_0 != 1");
    for (std::size_t n = 0; n < values.size(); ++n) {
        const Int den = values[n].den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(ctx.p())))
            throw std::invalid_argument(
                "coefficient table invariant violated: denominator of u_" +
                std::to_string(n) + " divisible by p");
    }
}

}  // namespace

CoefficientTable::CoefficientTable(const PrimeContext& ctx, std::vector<Rational> values)
    : ctx_(ctx), values_(std::move(values)) {
    validate_table(ctx_, values_);
}

CoefficientTable CoefficientTable::with_value(long n, const Rational& v) const {
    std::vector<Rational> values = values_;
    values.at(static_cast<std::size_t>(n)) = v;
    return CoefficientTable(ctx_, std::move(values));
}

CoefficientTable artin_hasse_coefficients(const PrimeContext& ctx, long max_n) {
    if (max_n < 0)
        throw std::invalid_argument("coefficient count must be nonnegative");
    std::vector<Rational> u(static_cast<std::size_t>(max_n) + 1);
    u[0] = 1;
    for (long n = 1; n <= max_n; ++n) {
        Rational sum = 0;
        for (long q = 1; q <= n; q *= ctx.p())
            sum += u[static_cast<std::size_t>(n - q)];
        u[static_cast<std::size_t>(n)] = sum / n;
    }
    return CoefficientTable(ctx, std::move(u));
}

namespace {

// c += a * b, all truncated to degree max_n; b is sparse (p-power indices).
std::vector<Rational> mul_trunc(const std::vector<Rational>& a,
                                const std::vector<std::pair<long, Rational>>& b,
                                long max_n) {
    std::vector<Rational> c(static_cast<std::size_t>(max_n) + 1);
    for (const auto& [exp, coeff] : b) {
        for (long d = 0; d + exp <= max_n; ++d) {
            const Rational& ad = a[static_cast<std::size_t>(d)];
            if (!ad.is_zero())
                c[static_cast<std::size_t>(d + exp)] += ad * coeff;
        }
    }
    return c;
}

}  // namespace

CoefficientTable artin_hasse_via_exp(const PrimeContext& ctx, long max_n) {
    if (max_n < 0)
        throw std::invalid_argument("coefficient count must be nonnegative");
    // S = sum of x^{p^k}/p^k for p^k <= max_n (k = 0 gives the x term).
    std::vector<std::pair<long, Rational>> s;
    long k = 0;
    for (long q = 1; q <= max_n; q *= ctx.p(), ++k)
        s.emplace_back(q, Rational(Int(1), int_pow(ctx.p(), k)));

    std::vector<Rational> e(static_cast<std::size_t>(max_n) + 1);
    e[0] = 1;
    std::vector<Rational> term = e;  // S^m / m!, starting at m = 0
    for (long m = 1; m <= max_n; ++m) {
        term = mul_trunc(term, s, max_n);
        const Rational inv_m(1, m);
        for (auto& t : term)
            t *= inv_m;
        for (long d = 0; d <= max_n; ++d)
            e[static_cast<std::size_t>(d)] += term[static_cast<std::size_t>(d)];
    }
    return CoefficientTable(ctx, std::move(e));
}

Int p_element_count(const CoefficientTable& table, long n) {
    if (n < 0 || n > table.max_index())
        throw std::invalid_argument("coefficient index out of range");
    const Rational h = table.value(n) * Rational(factorial(n));
    if (!h.is_integer())
        throw std::logic_error("n! * u_n is not an integer; arithmetic bug");
    if (h.sign() < 0)
        throw std::logic_error("n! * u_n is negative; arithmetic bug");
    return h.num();
}

Int p_element_count(const PrimeContext& ctx, long n) {
    return p_element_count(artin_hasse_coefficients(ctx, n), n);
}

std::vector<long> residues_mod_p(const CoefficientTable& table) {
    std::vector<long> out;
    out.reserve(table.values().size());
    for (const Rational& q : table.values())
        out.push_back(residue_mod_p(q, table.ctx()));
    return out;
}

std::vector<long> p_kernel_slice(const PrimeContext& ctx, long i, long j, long count) {
    if (i < 0)
        throw std::invalid_argument("kernel index i must be nonnegative");
    if (count < 0)
        throw std::invalid_argument("kernel slice length must be nonnegative");
    const Int stride = int_pow(ctx.p(), i);
    if (j < 0 || Int(j) >= stride)
        throw std::invalid_argument("kernel offset j out of range [0, p^i)");
    if (count == 0)
        return {};
    const Int max_index = stride * (count - 1) + j;
    if (max_index > 200000)
        throw std::invalid_argument("kernel slice too large (needs u_n beyond n = 200000)");

    const auto table = artin_hasse_coefficients(ctx, max_index.get_si());
    const long stride_l = stride.get_si();
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n)
        out.push_back(residue_mod_p(table.value(stride_l * n + j), ctx));
    return out;
}

std::vector<Rational> cartier(const std::vector<Rational>& coeffs, const PrimeContext& ctx) {
    if (coeffs.empty())
        return {};
    const long len = static_cast<long>(coeffs.size());
    const long out_len = (len - 1) / ctx.p() + 1;
    std::vector<Rational> out(static_cast<std::size_t>(out_len));
    for (long n = 0; n < out_len; ++n)
        out[static_cast<std::size_t>(n)] = coeffs[static_cast<std::size_t>(ctx.p() * n)];
    return out;
}

ExactMatrix phi_matrix(const CoefficientTable& table, std::size_t size) {
    if (size == 0)
        throw std::invalid_argument("operator matrix size must be positive");
    const long needed = table.ctx().p() * (static_cast<long>(size) - 1);
    if (needed > table.max_index())
        throw std::invalid_argument("coefficient table too short for operator matrix");
    ExactMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const long idx = table.ctx().p() * static_cast<long>(c) - static_cast<long>(r);
            if (idx >= 0)
                m(r, c) = table.value(idx);
        }
    return m;
}

ExactMatrix phi_matrix(const PrimeContext& ctx, std::size_t size) {
    if (size == 0)
        throw std::invalid_argument("operator matrix size must be positive");
    return phi_matrix(artin_hasse_coefficients(ctx, ctx.p() * (static_cast<long>(size) - 1)),
                      size);
}

}  // namespace ahdet
