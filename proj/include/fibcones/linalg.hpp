#pragma once

#include <cstddef>
#include <vector>

#include "fibcones/rational.hpp"

namespace fibcones {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Sizes here never exceed a few dozen.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transposed() const;
    Vector apply(const Vector& v) const;

    bool is_identity() const;
    /// Square 0/1 matrix with exactly one 1 in every row and column.
    bool is_permutation() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

Rational dot(const Vector& a, const Vector& b);

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows, std::size_t dim);

/// Inverse of a square nonsingular matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

}  // namespace fibcones
