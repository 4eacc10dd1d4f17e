#include "fibcones/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fibcones {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        int row_hits = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& x = (*this)(r, c);
            if (x == 1) {
                ++row_hits;
                ++col_hits[c];
            } else if (!is_zero(x)) {
                return false;
            }
        }
        if (row_hits != 1) return false;
    }
    for (int h : col_hits)
        if (h != 1) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: size mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
    return s;
}

std::size_t rank(const std::vector<Vector>& rows_in, std::size_t dim) {
    std::vector<Vector> rows = rows_in;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (is_zero(rows[i][c])) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rank(rows, m.cols());
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(a(pivot, c))) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        const Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace fibcones
