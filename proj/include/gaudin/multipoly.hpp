#pragma once

// Minimal sparse multivariate polynomials over the rationals. Just enough
// ring structure to let the generic univariate code run with coefficients
// that are polynomials in cell coordinates (f11 and friends): add, subtract,
// multiply, divide by an invertible constant. No general division, no
// elimination; that is out of scope on purpose.

#include <map>
#include <sstream>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

class MultiPoly {
  public:
    using Expo = std::vector<int>;  // one exponent per variable, trailing zeros trimmed

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c) {
        if (c != 0) t_[Expo{}] = c;
    }
    static MultiPoly variable(int idx) {
        MultiPoly p;
        Expo e(std::size_t(idx) + 1, 0);
        e[std::size_t(idx)] = 1;
        p.t_[e] = 1;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (t_.empty()) return Rat(0);
        if (!is_constant()) throw CheckError("multivariate value is not constant");
        return t_.begin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, Rat(-c));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Expo e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                while (!e.empty() && e.back() == 0) e.pop_back();
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    // division is only defined by invertible constants
    friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
        if (!b.is_constant() || b.is_zero())
            throw CheckError("multivariate division only by nonzero constants");
        Rat inv = 1 / b.constant_value();
        MultiPoly r = a;
        for (auto& [e, c] : r.t_) c *= inv;
        return r;
    }
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    const std::map<Expo, Rat>& terms() const { return t_; }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            os << c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) {
                    os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
                    if (e[i] > 1) os << "^" << e[i];
                }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        return os << p.str({});
    }

  private:
    void add_term(const Expo& e, const Rat& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (c != 0) t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<Expo, Rat> t_;
};

template <>
struct scalar_traits<MultiPoly> {
    static constexpr bool is_exact = true;
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Rat(1)); }
    static MultiPoly from_int(long v) { return MultiPoly(Rat(v)); }
    static bool is_zero(const MultiPoly& a, double /*tol*/ = 0) { return a.is_zero(); }
    static bool near(const MultiPoly& a, const MultiPoly& b, double /*tol*/ = 0) {
        return a == b;
    }
    static double abs_val(const MultiPoly& a) {
        double m = 0;
        for (const auto& [e, c] : a.terms()) m += std::abs(c.convert_to<double>());
        return m;
    }
};

}  // namespace gaudin
