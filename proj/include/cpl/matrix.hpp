// Dense exact matrices over a field scalar (Rational or RatFunc).
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace cpl {

template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<S>(cols, S(0))) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    static Matrix from_rows(std::vector<std::vector<S>> rows) {
        Matrix m;
        m.rows_ = (int)rows.size();
        m.cols_ = m.rows_ ? (int)rows[0].size() : 0;
        for (const auto& r : rows)
            if ((int)r.size() != m.cols_) throw std::domain_error("matrix: ragged rows");
        m.a_ = std::move(rows);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int i, int j) { return a_[i][j]; }
    const S& operator()(int i, int j) const { return a_[i][j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::domain_error("matrix: size mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k) == S(0)) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    if (y(k, j) == S(0)) continue;
                    r(i, j) += x(i, k) * y(k, j);
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::domain_error("matrix: size mismatch");
        Matrix r = x;
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) r(i, j) += y(i, j);
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::domain_error("matrix: size mismatch");
        Matrix r = x;
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) r(i, j) -= y(i, j);
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& x) {
        Matrix r = x;
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) r(i, j) = c * r(i, j);
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = a_[i][j];
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_upper_triangular() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < i && j < cols_; ++j)
                if (!(a_[i][j] == S(0))) return false;
        return true;
    }
    bool is_lower_triangular() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!(a_[i][j] == S(0))) return false;
        return true;
    }
    bool is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

    S trace() const {
        S t(0);
        for (int i = 0; i < rows_; ++i) t += a_[i][i];
        return t;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<S>> a_;
};

/// Determinant by fraction-free-ish Gaussian elimination over the field.
template <class S>
S determinant(Matrix<S> m) {
    if (!m.is_square()) throw std::domain_error("determinant: not square");
    int n = m.rows();
    S det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!(m(r, col) == S(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return S(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = S(0) - det;
        }
        det = det * m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == S(0)) continue;
            S factor = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; nullopt on singular input.
template <class S>
std::optional<Matrix<S>> inverse(Matrix<S> m) {
    if (!m.is_square()) throw std::domain_error("inverse: not square");
    int n = m.rows();
    Matrix<S> inv = Matrix<S>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!(m(r, col) == S(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        S p = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m(r, col) == S(0)) continue;
            S factor = m(r, col);
            for (int j = 0; j < n; ++j) {
                m(r, j) -= factor * m(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Row rank by Gaussian elimination, exact.
template <class S>
int rank(Matrix<S> m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m(i, col) == S(0))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == S(0)) continue;
            S factor = m(i, col) / m(r, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace cpl
