#pragma once

// Differential operators sum c_k d^k with coefficients in a differential
// ring: rational functions, polynomials (cleared form), or matrix-valued
// rational functions. Multiplication uses d∘c = c d + c', applied by
// composing with d one power at a time, so no binomial bookkeeping.
//
// MatSeries is the matrix coefficient ring: a matrix numerator of polynomials
// over a single scalar monic denominator. All generating series of a module
// share small denominators, so gcd work stays on scalar polynomials.

#include "gaudin/linalg.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"

namespace gaudin {

template <class K>
struct MatSeries {
    Matrix<Polynomial<K>> num;
    Polynomial<K> den;

    MatSeries() : num(), den(Polynomial<K>::one()) {}
    MatSeries(Matrix<Polynomial<K>> n, Polynomial<K> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw CheckError("zero denominator in matrix series");
        if (num.is_zero()) {
            den = Polynomial<K>::one();
            return;
        }
        K lead = den.leading();
        if (!scalar_traits<K>::near(lead, scalar_traits<K>::one(), 0)) {
            K inv = scalar_traits<K>::one() / lead;
            den = inv * den;
            num = Polynomial<K>(inv) * num;
        }
        reduce();
    }
    static MatSeries from_const(const Matrix<K>& m) {
        Matrix<Polynomial<K>> n(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!scalar_traits<K>::is_zero(m(i, j), 0)) n(i, j) = Polynomial<K>(m(i, j));
        return MatSeries(std::move(n), Polynomial<K>::one());
    }
    static MatSeries identity(int dim) {
        Matrix<Polynomial<K>> n(dim, dim);
        for (int i = 0; i < dim; ++i) n(i, i) = Polynomial<K>::one();
        return MatSeries(std::move(n), Polynomial<K>::one());
    }

    bool is_zero() const { return num.is_zero(); }
    MatSeries zero_like() const { return MatSeries(Matrix<Polynomial<K>>(num.rows(), num.cols()), Polynomial<K>::one()); }

    MatSeries operator-() const {
        MatSeries r = *this;
        r.num = -r.num;
        return r;
    }
    friend MatSeries operator+(const MatSeries& a, const MatSeries& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den == b.den) return MatSeries(a.num + b.num, a.den);
        if constexpr (scalar_traits<K>::is_exact) {
            Polynomial<K> g = poly_gcd(a.den, b.den);
            Polynomial<K> ad = exact_div(a.den, g), bd = exact_div(b.den, g);
            return MatSeries(Polynomial<K>(bd) * a.num + Polynomial<K>(ad) * b.num, a.den * bd);
        } else {
            return MatSeries(b.den * a.num + a.den * b.num, a.den * b.den);
        }
    }
    friend MatSeries operator-(const MatSeries& a, const MatSeries& b) { return a + (-b); }
    friend MatSeries operator*(const MatSeries& a, const MatSeries& b) {
        if (a.is_zero() || b.is_zero()) {
            int rows = a.num.rows() > 0 ? a.num.rows() : b.num.rows();
            int cols = b.num.cols() > 0 ? b.num.cols() : a.num.cols();
            return MatSeries(Matrix<Polynomial<K>>(rows, cols), Polynomial<K>::one());
        }
        return MatSeries(a.num * b.num, a.den * b.den);
    }
    MatSeries& operator+=(const MatSeries& o) { return *this = *this + o; }
    MatSeries& operator-=(const MatSeries& o) { return *this = *this - o; }

    MatSeries derivative() const {
        if (is_zero()) return *this;
        Matrix<Polynomial<K>> dn(num.rows(), num.cols());
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) dn(i, j) = num(i, j).derivative();
        if (den == Polynomial<K>::one()) return MatSeries(std::move(dn), den);
        return MatSeries(Polynomial<K>(den) * dn - Polynomial<K>(den.derivative()) * num, den * den);
    }

    // equality as rational functions (cross-multiplied), exact scalars
    bool equals(const MatSeries& o) const {
        if (num.rows() != o.num.rows() || num.cols() != o.num.cols()) return false;
        return Polynomial<K>(o.den) * num == Polynomial<K>(den) * o.num;
    }

    // numerator against a caller-specified common denominator; the division
    // must come out exact (or small-remainder for floats)
    Matrix<Polynomial<K>> over_common_den(const Polynomial<K>& target, double tol) const {
        Matrix<Polynomial<K>> out(num.rows(), num.cols());
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) {
                if (num(i, j).is_zero()) continue;
                out(i, j) = div_checked(num(i, j) * target, den, tol);
            }
        return out;
    }

  private:
    void reduce() {
        if constexpr (scalar_traits<K>::is_exact) {
            if (den.degree_or(0) == 0) return;
            Polynomial<K> g = den;
            for (int i = 0; i < num.rows() && g.degree_or(0) > 0; ++i)
                for (int j = 0; j < num.cols() && g.degree_or(0) > 0; ++j)
                    if (!num(i, j).is_zero()) g = poly_gcd(g, num(i, j));
            if (g.degree_or(0) > 0) {
                for (int i = 0; i < num.rows(); ++i)
                    for (int j = 0; j < num.cols(); ++j)
                        if (!num(i, j).is_zero()) num(i, j) = exact_div(num(i, j), g);
                den = exact_div(den, g);
            }
        }
    }
};

template <class C>
class DifferentialOperator {
  public:
    DifferentialOperator() = default;
    explicit DifferentialOperator(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> order() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    int order_or(int if_zero) const { return c_.empty() ? if_zero : int(c_.size()) - 1; }

    C coeff(int k) const {
        if (k >= 0 && std::size_t(k) < c_.size()) return c_[std::size_t(k)];
        if (c_.empty()) throw CheckError("coefficient of the zero operator has no shape");
        return c_[0].zero_like();
    }
    const std::vector<C>& coeffs() const { return c_; }

    DifferentialOperator operator-() const {
        DifferentialOperator r = *this;
        for (C& x : r.c_) x = -x;
        return r;
    }
    friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        std::vector<C> c;
        std::size_t top = std::max(a.c_.size(), b.c_.size());
        c.reserve(top);
        for (std::size_t k = 0; k < top; ++k) {
            if (k < a.c_.size() && k < b.c_.size())
                c.push_back(a.c_[k] + b.c_[k]);
            else if (k < a.c_.size())
                c.push_back(a.c_[k]);
            else
                c.push_back(b.c_[k]);
        }
        return DifferentialOperator(std::move(c));
    }
    friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
        return a + (-b);
    }
    DifferentialOperator& operator+=(const DifferentialOperator& o) { return *this = *this + o; }

    // d composed on the left: coefficients shift up one power and each
    // existing coefficient contributes its derivative
    DifferentialOperator d_compose() const {
        if (c_.empty()) return *this;
        std::vector<C> c(c_.size() + 1, c_[0].zero_like());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c[k + 1] += c_[k];
            c[k] += c_[k].derivative();
        }
        return DifferentialOperator(std::move(c));
    }

    friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
        if (a.c_.empty() || b.c_.empty()) return DifferentialOperator();
        DifferentialOperator acc;
        DifferentialOperator dib = b;  // d^i composed with b
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i].is_zero()) {
                std::vector<C> part;
                part.reserve(dib.c_.size());
                for (const C& x : dib.c_) part.push_back(a.c_[i] * x);
                acc += DifferentialOperator(std::move(part));
            }
            if (i + 1 < a.c_.size()) dib = dib.d_compose();
        }
        return acc;
    }

    bool operator==(const DifferentialOperator& o) const { return c_ == o.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

// Row determinant: sum over permutations of signed products taken in row
// order, for rings whose entries need not commute. Factorial blowup, so the
// size is capped.
template <class T>
T rdet(const std::vector<std::vector<T>>& a) {
    int n = int(a.size());
    if (n == 0) throw InputError("row determinant of an empty matrix");
    if (n > 5) throw InputError("row determinant limited to size 5");
    for (const auto& row : a)
        if (int(row.size()) != n) throw InputError("row determinant needs a square matrix");
    std::vector<int> perm(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    bool first = true;
    T acc{};
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inversions;
        T term = a[0][std::size_t(perm[0])];
        for (int i = 1; i < n; ++i) term = term * a[std::size_t(i)][std::size_t(perm[std::size_t(i)])];
        if (inversions % 2 == 1) term = -term;
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = acc + term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// scalar coefficient rings need the same little interface MatSeries has
template <class K>
struct RfCoeff {
    RationalFunction<K> v;
    RfCoeff() = default;
    explicit RfCoeff(RationalFunction<K> f) : v(std::move(f)) {}
    bool is_zero() const { return v.is_zero(); }
    RfCoeff zero_like() const { return RfCoeff(); }
    RfCoeff derivative() const { return RfCoeff(v.derivative()); }
    RfCoeff operator-() const { return RfCoeff(RationalFunction<K>(-v)); }
    friend RfCoeff operator+(const RfCoeff& a, const RfCoeff& b) { return RfCoeff(a.v + b.v); }
    friend RfCoeff operator-(const RfCoeff& a, const RfCoeff& b) { return RfCoeff(a.v - b.v); }
    friend RfCoeff operator*(const RfCoeff& a, const RfCoeff& b) { return RfCoeff(a.v * b.v); }
    RfCoeff& operator+=(const RfCoeff& o) { v += o.v; return *this; }
    bool operator==(const RfCoeff& o) const { return v == o.v; }
};

template <class K>
struct PolyCoeff {
    Polynomial<K> v;
    PolyCoeff() = default;
    explicit PolyCoeff(Polynomial<K> p) : v(std::move(p)) {}
    bool is_zero() const { return v.is_zero(); }
    PolyCoeff zero_like() const { return PolyCoeff(); }
    PolyCoeff derivative() const { return PolyCoeff(v.derivative()); }
    PolyCoeff operator-() const { return PolyCoeff(Polynomial<K>(-v)); }
    friend PolyCoeff operator+(const PolyCoeff& a, const PolyCoeff& b) { return PolyCoeff(a.v + b.v); }
    friend PolyCoeff operator-(const PolyCoeff& a, const PolyCoeff& b) { return PolyCoeff(a.v - b.v); }
    friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) { return PolyCoeff(a.v * b.v); }
    PolyCoeff& operator+=(const PolyCoeff& o) { v += o.v; return *this; }
    bool operator==(const PolyCoeff& o) const { return v == o.v; }
};

template <class K>
using ScalarDiffOp = DifferentialOperator<RfCoeff<K>>;
template <class K>
using ClearedDiffOp = DifferentialOperator<PolyCoeff<K>>;

// apply an operator with rational-function coefficients to a polynomial
template <class K>
RationalFunction<K> apply_op(const ScalarDiffOp<K>& op, const Polynomial<K>& p) {
    RationalFunction<K> acc;
    Polynomial<K> dp = p;
    for (int k = 0; k <= op.order_or(-1); ++k) {
        if (!op.coeff(k).is_zero()) acc += op.coeff(k).v * RationalFunction<K>(dp);
        dp = dp.derivative();
    }
    return acc;
}

template <class K>
Polynomial<K> apply_op(const ClearedDiffOp<K>& op, const Polynomial<K>& p) {
    Polynomial<K> acc;
    Polynomial<K> dp = p;
    for (int k = 0; k <= op.order_or(-1); ++k) {
        acc += op.coeff(k).v * dp;
        dp = dp.derivative();
    }
    return acc;
}

}  // namespace gaudin
