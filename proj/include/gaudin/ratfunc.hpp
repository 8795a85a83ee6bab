#pragma once

// Rational functions in one variable. Normal form: denominator monic and
// nonzero; with exact scalars the fraction is also gcd-reduced. Float
// fractions skip gcd (numerically meaningless) but share literal denominator
// objects where possible so products do not balloon.

#include "gaudin/poly.hpp"

namespace gaudin {

template <class K>
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial<K>::one()) {}
    explicit RationalFunction(Polynomial<K> num) : num_(std::move(num)), den_(Polynomial<K>::one()) {}
    RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static RationalFunction one() { return RationalFunction(Polynomial<K>::one()); }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        if constexpr (scalar_traits<K>::is_exact) {
            Polynomial<K> g = poly_gcd(a.den_, b.den_);
            Polynomial<K> ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
            return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
        } else {
            return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        }
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw CheckError("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    bool near(const RationalFunction& o, double tol) const {
        Polynomial<K> lhs = num_ * o.den_, rhs = o.num_ * den_;
        Polynomial<K> diff = lhs - rhs;
        double scale = std::max({1.0, lhs.max_abs(), rhs.max_abs()});
        return diff.max_abs() <= tol * scale;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (scalar_traits<K>::is_zero(d, 0)) throw CheckError("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "u") const {
        if (den_ == Polynomial<K>::one()) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw CheckError("zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<K>::one();
            return;
        }
        if constexpr (scalar_traits<K>::is_exact) {
            Polynomial<K> g = poly_gcd(num_, den_);
            if (g.degree_or(0) > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        K lead = den_.leading();
        if (!scalar_traits<K>::near(lead, scalar_traits<K>::one(), 0)) {
            K inv = scalar_traits<K>::one() / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial<K> num_, den_;
};

// Coefficients of u^{-1}, ..., u^{-order} in the expansion of num/den at
// infinity. Requires deg num < deg den (the function must vanish there);
// anything else is not expandable in negative powers alone.
template <class K>
std::vector<K> laurent_at_infinity(const Polynomial<K>& num, const Polynomial<K>& den, int order) {
    if (den.is_zero()) throw CheckError("zero denominator");
    if (num.is_zero()) return std::vector<K>(std::size_t(order), scalar_traits<K>::zero());
    int dn = *num.degree(), dd = *den.degree();
    if (dn >= dd) throw CheckError("not expandable at infinity: numerator degree too large");
    // reversed series: num(u)/den(u) = w^{dd-dn} * nrev(w)/drev(w), w = 1/u
    auto rev = [](const Polynomial<K>& p, int deg) {
        std::vector<K> c(std::size_t(deg) + 1, scalar_traits<K>::zero());
        for (int i = 0; i <= deg; ++i) c[std::size_t(deg - i)] = p.coeff(i);
        return c;
    };
    std::vector<K> nrev = rev(num, dn), drev = rev(den, dd);
    int shift = dd - dn;  // >= 1
    std::vector<K> series(std::size_t(order), scalar_traits<K>::zero());
    // power-series division nrev/drev up to order-shift
    std::vector<K> e(std::size_t(std::max(0, order - shift)) + 1, scalar_traits<K>::zero());
    K inv0 = scalar_traits<K>::one() / drev[0];
    for (std::size_t k = 0; k < e.size(); ++k) {
        K acc = k < nrev.size() ? nrev[k] : scalar_traits<K>::zero();
        for (std::size_t j = 1; j <= k && j < drev.size(); ++j) acc -= drev[j] * e[k - j];
        e[k] = inv0 * acc;
    }
    for (int j = 1; j <= order; ++j) {
        int k = j - shift;
        if (k >= 0) series[std::size_t(j - 1)] = e[std::size_t(k)];
    }
    return series;
}

template <class K>
std::vector<K> laurent_at_infinity(const RationalFunction<K>& f, int order) {
    return laurent_at_infinity(f.num(), f.den(), order);
}

template <class K>
RationalFunction<Cplx> to_complex_rf(const RationalFunction<K>& f) {
    auto conv = [](const Polynomial<K>& p) {
        std::vector<Cplx> c(p.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = scalar_traits<K>::to_complex(p.coeffs()[i]);
        return Polynomial<Cplx>(std::move(c));
    };
    return RationalFunction<Cplx>(conv(f.num()), conv(f.den()));
}

template <class K>
Polynomial<Cplx> to_complex_poly(const Polynomial<K>& p) {
    std::vector<Cplx> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = scalar_traits<K>::to_complex(p.coeffs()[i]);
    return Polynomial<Cplx>(std::move(c));
}

}  // namespace gaudin
