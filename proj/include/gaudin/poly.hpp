#pragma once

// Dense univariate polynomials, coefficients lowest-degree-first.
// The zero polynomial has an empty coefficient vector and degree() returns
// an empty optional; nothing in here encodes "-1 means zero".

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const K& c) : c_{c} { trim(); }
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(scalar_traits<K>::one()); }
    static Polynomial monomial(int deg, const K& coeff) {
        std::vector<K> c(std::size_t(deg) + 1, scalar_traits<K>::zero());
        c.back() = coeff;
        return Polynomial(std::move(c));
    }
    // u - r for each root, multiplied out
    static Polynomial from_roots(const std::vector<K>& roots) {
        Polynomial p = one();
        for (const K& r : roots) {
            Polynomial lin(std::vector<K>{K(-r), scalar_traits<K>::one()});
            p = p * lin;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    // degree with an explicit caller-chosen value for the zero polynomial
    int degree_or(int if_zero) const { return c_.empty() ? if_zero : int(c_.size()) - 1; }

    K coeff(int i) const {
        if (i < 0 || std::size_t(i) >= c_.size()) return scalar_traits<K>::zero();
        return c_[std::size_t(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }
    K leading() const {
        if (c_.empty()) throw CheckError("leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (K& x : r.c_) x = K(-x);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), scalar_traits<K>::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), scalar_traits<K>::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_traits<K>::is_zero(a.c_[i], 0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const K& s, const Polynomial& p) {
        Polynomial r = p;
        for (K& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const K& s) { return s * p; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * scalar_traits<K>::from_int(long(i));
        return Polynomial(std::move(d));
    }

    K eval(const K& x) const {
        K v = scalar_traits<K>::zero();
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    // q with q(v) = p(v + b), i.e. the coefficients of p around the point b
    Polynomial shifted(const K& b) const {
        Polynomial vb(std::vector<K>{b, scalar_traits<K>::one()});
        Polynomial q;
        for (std::size_t i = c_.size(); i-- > 0;) q = q * vb + Polynomial(c_[i]);
        return q;
    }

    Polynomial pow(int e) const {
        Polynomial r = one(), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    // division with remainder; exact for rational scalars, numeric for floats
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw CheckError("polynomial division by zero");
        Polynomial r = *this, q;
        int dd = *d.degree();
        K lead = d.leading();
        while (!r.is_zero() && r.degree_or(-1) >= dd) {
            int k = *r.degree() - dd;
            K f = r.leading() / lead;
            std::vector<K> qc(std::size_t(k) + 1, scalar_traits<K>::zero());
            qc.back() = f;
            Polynomial t(std::move(qc));
            q += t;
            r -= t * d;
            // guard against float cancellation leaving the degree unchanged
            if (!r.is_zero() && r.degree_or(-1) >= k + dd) r.c_.resize(std::size_t(k + dd));
            r.trim();
        }
        return {q, r};
    }

    double max_abs() const {
        double m = 0;
        for (const K& x : c_) m = std::max(m, scalar_traits<K>::abs_val(x));
        return m;
    }

    std::string str(const std::string& var = "u") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (scalar_traits<K>::is_zero(c_[i], 0)) continue;
            if (!first) os << " + ";
            os << "(" << c_[i] << ")";
            if (i == 1) os << "*" << var;
            if (i > 1) os << "*" << var << "^" << i;
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && scalar_traits<K>::is_zero(c_.back(), 0)) c_.pop_back();
    }
    std::vector<K> c_;
};

// exact division, error if the remainder is nonzero
template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw CheckError("polynomial division expected to be exact");
    return q;
}

// numeric division; the remainder must be small relative to the operands
template <class K>
Polynomial<K> div_checked(const Polynomial<K>& a, const Polynomial<K>& b, double tol) {
    auto [q, r] = a.divmod(b);
    if constexpr (scalar_traits<K>::is_exact) {
        if (!r.is_zero()) throw CheckError("polynomial division expected to be exact");
    } else {
        double scale = std::max(1.0, a.max_abs());
        if (r.max_abs() > tol * scale)
            throw CheckError("polynomial division left a large remainder");
    }
    return q;
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
    if (p.is_zero()) throw CheckError("monic normalization of zero polynomial");
    K inv = scalar_traits<K>::one() / p.leading();
    return inv * p;
}

// gcd, monic-normalized; exact scalars only
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    static_assert(scalar_traits<K>::is_exact, "gcd requires exact arithmetic");
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return monic(a);
}

template <class K>
Polynomial<K> poly_lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<K>();
    return monic(exact_div(a * b, poly_gcd(a, b)));
}

// alpha (alpha-1) ... (alpha-m+1); the empty product is 1
template <class K>
Polynomial<K> falling_factorial(int m) {
    Polynomial<K> p = Polynomial<K>::one();
    for (int j = 0; j < m; ++j) {
        p = p * Polynomial<K>(std::vector<K>{scalar_traits<K>::from_int(-j),
                                             scalar_traits<K>::one()});
    }
    return p;
}

}  // namespace gaudin
