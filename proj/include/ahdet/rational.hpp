#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ahdet {

using Int = mpz_class;

/*
 * Exact fraction, always in lowest terms with a positive denominator.
 * Every arithmetic operation in the library is exact; there is no
 * rounding anywhere.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// A validated small prime; every computation in the library is relative to one.
// Trial division is plenty: the primes of interest are tiny.
class PrimeContext {
public:
    explicit PrimeContext(long p) : p_(p) {
        if (p < 2)
            throw std::invalid_argument("p must be prime");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("p must be prime");
    }
    long p() const { return p_; }

private:
    long p_;
};

// p-adic valuation of a nonzero rational: the v with q = p^v * (a/b), p ∤ ab.
long ord_p(const Rational& q, const PrimeContext& ctx);

// ord_p(n!) = sum_{j>=1} floor(n / p^j).
long legendre_valuation(long n, const PrimeContext& ctx);

Int factorial(long n);
Int binomial(long n, long k);   // 0 when k < 0 or k > n
Int int_pow(long base, long exp);

// num * den^{-1} mod p, in [0, p). The denominator must be coprime to p.
long residue_mod_p(const Rational& q, const PrimeContext& ctx);

}  // namespace ahdet
