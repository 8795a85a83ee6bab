#pragma once

// Truncated power series in q over the rationals, for graded characters.
// A series carries its truncation order; arithmetic works to the smaller of
// the two orders and never silently extends.

#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

class QSeries {
  public:
    explicit QSeries(int trunc) : c_(std::size_t(trunc) + 1, Rat(0)) {
        if (trunc < 0) throw InputError("negative series truncation");
    }
    static QSeries one(int trunc) {
        QSeries s(trunc);
        s.c_[0] = 1;
        return s;
    }
    static QSeries monomial(int k, int trunc) {
        QSeries s(trunc);
        if (k < 0) throw InputError("negative power of q");
        if (k <= trunc) s.c_[std::size_t(k)] = 1;
        return s;
    }

    int trunc() const { return int(c_.size()) - 1; }
    Rat coeff(int i) const {
        if (i < 0 || std::size_t(i) >= c_.size()) return Rat(0);
        return c_[std::size_t(i)];
    }

    QSeries& operator+=(const QSeries& o) {
        shrink_to(std::min(trunc(), o.trunc()));
        for (int i = 0; i <= trunc(); ++i) c_[std::size_t(i)] += o.c_[std::size_t(i)];
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        shrink_to(std::min(trunc(), o.trunc()));
        for (int i = 0; i <= trunc(); ++i) c_[std::size_t(i)] -= o.c_[std::size_t(i)];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.trunc(), b.trunc()));
        for (int i = 0; i <= r.trunc(); ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; i + j <= r.trunc(); ++j)
                r.c_[std::size_t(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // multiplicative inverse; needs a unit constant term
    QSeries reciprocal() const {
        if (c_[0] == 0) throw CheckError("series reciprocal needs a unit constant term");
        QSeries r(trunc());
        r.c_[0] = 1 / c_[0];
        for (int k = 1; k <= trunc(); ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[std::size_t(j)] * r.c_[std::size_t(k - j)];
            r.c_[std::size_t(k)] = -acc / c_[0];
        }
        return r;
    }
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.reciprocal(); }

    bool operator==(const QSeries& o) const {
        int t = std::min(trunc(), o.trunc());
        for (int i = 0; i <= t; ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return true;
    }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    // sum of the stored coefficients: the value at q=1 when the series is
    // actually a polynomial that fits inside the truncation
    Rat coefficient_sum() const {
        Rat s(0);
        for (const Rat& c : c_) s += c;
        return s;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (int i = 0; i <= trunc(); ++i) {
            if (c_[std::size_t(i)] == 0) continue;
            if (!first) s += " + ";
            s += c_[std::size_t(i)].str();
            if (i > 0) s += "*q^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : s;
    }

  private:
    void shrink_to(int t) { c_.resize(std::size_t(t) + 1); }
    std::vector<Rat> c_;
};

// (q)_a = (1-q)(1-q^2)...(1-q^a)
inline QSeries q_pochhammer(int a, int trunc) {
    QSeries r = QSeries::one(trunc);
    for (int j = 1; j <= a; ++j) r *= QSeries::one(trunc) - QSeries::monomial(j, trunc);
    return r;
}

}  // namespace gaudin
