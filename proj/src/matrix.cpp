#include "ahdet/matrix.hpp"

namespace ahdet {

Rational det_exact(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n)
        throw std::invalid_argument("determinant requires a square, nonempty matrix");

    // Integer lift: scale row i by the lcm of its denominators.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int den = m(i, j).den();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m(i, j);
            Int factor;
            mpz_divexact(factor.get_mpz_t(), row_lcm.get_mpz_t(), q.den().get_mpz_t());
            a[i][j] = q.num() * factor;
        }
        scale *= row_lcm;
    }

    // Bareiss elimination; every division below is exact.
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == k)
                return Rational(0);
            a[k].swap(a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    Int det = a[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return Rational(det, scale);
}

}  // namespace ahdet
