#pragma once

// Scalar layer: exact rationals (GMP-backed) and complex doubles, plus the
// small amount of glue the generic algebra needs to treat them uniformly.
// Exact mode compares with operator==; float mode always goes through an
// explicit tolerance argument.

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaudin {

using Rat = boost::multiprecision::mpq_rational;
using Cplx = std::complex<double>;

// Raised on malformed user input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical consistency check fails (CLI exit code 1).
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultTol = 1e-8;
constexpr double kClusterGap = 1e-6;  // relative gap for eigenvalue clustering

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static bool is_zero(const Rat& a, double /*tol*/ = 0) { return a == 0; }
    static bool near(const Rat& a, const Rat& b, double /*tol*/ = 0) { return a == b; }
    static double abs_val(const Rat& a) { return std::abs(a.convert_to<double>()); }
    static Cplx to_complex(const Rat& a) { return Cplx(a.convert_to<double>(), 0.0); }
};

template <>
struct scalar_traits<Cplx> {
    static constexpr bool is_exact = false;
    static Cplx zero() { return Cplx(0.0, 0.0); }
    static Cplx one() { return Cplx(1.0, 0.0); }
    static Cplx from_int(long v) { return Cplx(double(v), 0.0); }
    static bool is_zero(const Cplx& a, double tol) { return std::abs(a) <= tol; }
    static bool near(const Cplx& a, const Cplx& b, double tol) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tol * scale;
    }
    static double abs_val(const Cplx& a) { return std::abs(a); }
    static Cplx to_complex(const Cplx& a) { return a; }
};

// Parses "p/q", plain integers, and decimal strings ("-1.25" -> -5/4).
// Decimals are exact: the fractional part becomes p/10^k.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    if (s.find('/') != std::string::npos) {
        try {
            Rat v(s);
            // gmp accepts "1/0" without canonicalizing; reject it before
            // arithmetic turns it into a division fault
            if (denominator(v) == 0) throw InputError("zero denominator in: " + s);
            return v;
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("bad rational literal: " + s);
        }
    }
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            return Rat(s);
        } catch (const std::exception&) {
            throw InputError("bad integer literal: " + s);
        }
    }
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad decimal literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
    if (head.empty()) head = "0";
    try {
        Rat ip(head);
        Rat fp = frac.empty() ? Rat(0)
                              : Rat(boost::multiprecision::mpz_int(frac),
                                    boost::multiprecision::pow(boost::multiprecision::mpz_int(10),
                                                               unsigned(frac.size())));
        Rat v = ip + fp;
        return neg ? Rat(-v) : v;
    } catch (const std::exception&) {
        throw InputError("bad decimal literal: " + s);
    }
}

inline std::string format_rational(const Rat& a) { return a.str(); }

inline double to_double(const Rat& a) { return a.convert_to<double>(); }

}  // namespace gaudin
