#pragma once

#include "ahdet/rational.hpp"

#include <cstddef>
#include <vector>

namespace ahdet {

// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_.at(i * cols_ + j);
    }

    const std::vector<Rational>& entries() const { return data_; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/*
 * Exact determinant of a square matrix.
 *
 * The matrix is lifted to integers row by row (each row scaled by the lcm of
 * its denominators) and eliminated with Bareiss fraction-free pivoting, which
 * keeps every intermediate value an exact integer. The accumulated row
 * scalings are divided back out at the end.
 */
Rational det_exact(const ExactMatrix& m);

}  // namespace ahdet
