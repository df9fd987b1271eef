#include "ahdet/rational.hpp"

#include <ostream>

namespace ahdet {

std::string Rational::to_string() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

long ord_p(const Rational& q, const PrimeContext& ctx) {
    if (q.is_zero())
        throw std::invalid_argument("valuation of zero undefined");
    const Int p(ctx.p());
    const Int num = q.num();
    const Int den = q.den();
    Int scratch;
    const long vn = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    const long vd = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

long legendre_valuation(long n, const PrimeContext& ctx) {
    if (n < 0)
        throw std::invalid_argument("factorial valuation of negative argument");
    long acc = 0;
    for (long q = n / ctx.p(); q > 0; q /= ctx.p())
        acc += q;
    return acc;
}

Int factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (n < 0)
        throw std::invalid_argument("binomial with negative upper index");
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int int_pow(long base, long exp) {
    if (base < 0 || exp < 0)
        throw std::invalid_argument("int_pow expects nonnegative arguments");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

namespace {

long mod_inverse(long a, long p) {
    // extended Euclid; p prime and a in [1, p)
    long t = 0, new_t = 1;
    long r = p, new_r = a;
    while (new_r != 0) {
        const long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw std::logic_error("mod_inverse of non-invertible residue");
    return t < 0 ? t + p : t;
}

long reduce_mod(const Int& n, long p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

}  // namespace

long residue_mod_p(const Rational& q, const PrimeContext& ctx) {
    const long p = ctx.p();
    const long den = reduce_mod(q.den(), p);
    if (den == 0)
        throw std::logic_error("denominator divisible by p; residue undefined");
    const long num = reduce_mod(q.num(), p);
    return static_cast<long>(static_cast<__int128>(num) * mod_inverse(den, p) % p);
}

}  // namespace ahdet
