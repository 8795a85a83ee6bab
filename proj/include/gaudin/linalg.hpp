#pragma once

// Dense matrices over an arbitrary commutative ring (scalars, polynomials),
// plus field-only algorithms: reduced row echelon, kernel, solve. Exact
// scalars pivot on the first nonzero entry, floats on the largest magnitude
// above a tolerance; both are deterministic.

#include <string>
#include <vector>

#include "gaudin/poly.hpp"
#include "gaudin/scalar.hpp"

namespace gaudin {

// zero/one/is-zero for the entry types Matrix is used with
template <class T>
struct ring_of {
    static T zero() { return scalar_traits<T>::zero(); }
    static bool is_zero(const T& a) { return scalar_traits<T>::is_zero(a, 0); }
};
template <class K>
struct ring_of<Polynomial<K>> {
    static Polynomial<K> zero() { return Polynomial<K>(); }
    static bool is_zero(const Polynomial<K>& a) { return a.is_zero(); }
};

template <class T>
class Matrix {
  public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, ring_of<T>::zero()) {}
    static Matrix identity(int n, const T& one) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    bool is_zero() const {
        for (const T& x : a_)
            if (!ring_of<T>::is_zero(x)) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (T& x : m.a_) x = -x;
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw CheckError("matrix shape mismatch in product");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& aik = a(i, k);
                if (ring_of<T>::is_zero(aik)) continue;  // entries are often sparse
                for (int j = 0; j < b.c_; ++j) {
                    const T& bkj = b(k, j);
                    if (ring_of<T>::is_zero(bkj)) continue;
                    m(i, j) += aik * bkj;
                }
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (T& x : r.a_) x = s * x;
        return r;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transposed() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (int(v.size()) != c_) throw CheckError("matrix/vector shape mismatch");
        std::vector<T> w(std::size_t(r_), ring_of<T>::zero());
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) {
                if (ring_of<T>::is_zero((*this)(i, j))) continue;
                w[std::size_t(i)] += (*this)(i, j) * v[std::size_t(j)];
            }
        return w;
    }

    Matrix columns(const std::vector<int>& idx) const {
        Matrix m(r_, int(idx.size()));
        for (int i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, int(j)) = (*this)(i, idx[j]);
        return m;
    }
    Matrix rows_at(const std::vector<int>& idx) const {
        Matrix m(int(idx.size()), c_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < c_; ++j) m(int(i), j) = (*this)(idx[i], j);
        return m;
    }

    static Matrix vstack(const std::vector<Matrix>& parts) {
        int rows = 0, cols = parts.empty() ? 0 : parts[0].c_;
        for (const Matrix& p : parts) rows += p.r_;
        Matrix m(rows, cols);
        int at = 0;
        for (const Matrix& p : parts) {
            for (int i = 0; i < p.r_; ++i)
                for (int j = 0; j < cols; ++j) m(at + i, j) = p(i, j);
            at += p.r_;
        }
        return m;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw CheckError("matrix shape mismatch");
    }
    int r_, c_;
    std::vector<T> a_;
};

// ---- field algorithms (scalar entries only) ----

// In-place reduced row echelon form. Returns the pivot column per pivot row.
template <class K>
std::vector<int> rref(Matrix<K>& m, double tol) {
    double matrix_scale = 1.0;
    if constexpr (!scalar_traits<K>::is_exact) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                matrix_scale = std::max(matrix_scale, scalar_traits<K>::abs_val(m(i, j)));
    }
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        if constexpr (scalar_traits<K>::is_exact) {
            for (int i = row; i < m.rows(); ++i)
                if (!scalar_traits<K>::is_zero(m(i, col), 0)) {
                    piv = i;
                    break;
                }
        } else {
            double best = 0;
            for (int i = row; i < m.rows(); ++i) {
                double v = scalar_traits<K>::abs_val(m(i, col));
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
            if (piv >= 0 && best <= tol * matrix_scale) piv = -1;
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        K inv = scalar_traits<K>::one() / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            K f = m(i, col);
            if (scalar_traits<K>::is_zero(f, 0)) continue;
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
            m(i, col) = scalar_traits<K>::zero();  // no float residue at the pivot
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m, double tol) {
    return int(rref(m, tol).size());
}

// Kernel basis in column-echelon form: basis vector k has a unit entry at its
// free column and zeros at every other free column. Deterministic.
template <class K>
Matrix<K> kernel_basis(Matrix<K> m, double tol, std::vector<int>* unit_rows = nullptr) {
    std::vector<int> piv = rref(m, tol);
    std::vector<bool> is_piv(std::size_t(m.cols()), false);
    for (int c : piv) is_piv[std::size_t(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[std::size_t(c)]) free_cols.push_back(c);
    Matrix<K> ker(m.cols(), int(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        ker(free_cols[k], int(k)) = scalar_traits<K>::one();
        for (std::size_t r = 0; r < piv.size(); ++r)
            ker(piv[r], int(k)) = -m(int(r), free_cols[k]);
    }
    if (unit_rows) *unit_rows = free_cols;
    return ker;
}

// Least structural solve: X with A X = B, exact or tolerance-checked.
// Throws when the system is inconsistent.
template <class K>
Matrix<K> solve(const Matrix<K>& a, const Matrix<K>& b, double tol) {
    if (a.rows() != b.rows()) throw CheckError("solve: shape mismatch");
    Matrix<K> aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    std::vector<int> piv = rref(aug, tol);
    for (int c : piv)
        if (c >= a.cols()) throw CheckError("solve: inconsistent system");
    Matrix<K> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(int(r), a.cols() + j);
    return x;
}

template <class K>
Matrix<K> to_complex_matrix(const Matrix<K>& m) {
    return m;
}
inline Matrix<Cplx> to_complex_matrix(const Matrix<Rat>& m) {
    Matrix<Cplx> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = scalar_traits<Rat>::to_complex(m(i, j));
    return r;
}

template <class T>
std::string shape_str(const Matrix<T>& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace gaudin
