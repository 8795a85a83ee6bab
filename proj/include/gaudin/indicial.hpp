#pragma once

// Indicial polynomials of a Fuchsian operator: at infinity from the Laurent
// tails of the monic coefficients, at a finite point from the local expansion
// of the cleared (polynomial-coefficient) form. Exponents are the integer
// roots; non-integer roots are a hard failure because every operator this
// project feeds in here is supposed to have integer exponents.

#include "gaudin/diffop.hpp"

namespace gaudin {

// chi(alpha) = sum_i F_ii alpha(alpha-1)...(alpha-N+i+1), F_00 = 1, where
// F_ii is the u^{-i} coefficient of the i-th monic coefficient at infinity.
template <class K>
Polynomial<K> indicial_at_infinity(const ScalarDiffOp<K>& op, double tol = kDefaultTol) {
    if (op.is_zero()) throw InputError("indicial polynomial of the zero operator");
    int N = *op.order();
    const RationalFunction<K>& top = op.coeff(N).v;
    if (!scalar_traits<K>::near(top.num().coeff(0), scalar_traits<K>::one(), tol) || top.num().degree_or(0) != 0 ||
        top.den().degree_or(0) != 0)
        throw InputError("operator must be monic for the indicial polynomial at infinity");
    Polynomial<K> chi = falling_factorial<K>(N);
    for (int i = 1; i <= N; ++i) {
        const RationalFunction<K>& fi = op.coeff(N - i).v;
        if (fi.is_zero()) continue;
        std::vector<K> tail = laurent_at_infinity(fi, i);
        K fii = tail.back();
        if (scalar_traits<K>::is_zero(fii, 0)) continue;
        chi += fii * falling_factorial<K>(N - i);
    }
    return chi;
}

// Local indicial polynomial of the cleared operator Dt = sum G_i d^{N-i} at a
// point b where the Wronskian vanishes to order ns:
// chi(alpha) = sum_i g_i alpha(alpha-1)...(alpha-N+i+1) with g_i the
// coefficient of (u-b)^{ns-i} in G_i.
template <class K>
Polynomial<K> indicial_at_point(const ClearedDiffOp<K>& op, const K& b, int ns) {
    if (op.is_zero()) throw InputError("indicial polynomial of the zero operator");
    int N = *op.order();
    Polynomial<K> chi;
    for (int i = 0; i <= N; ++i) {
        const Polynomial<K>& gi = op.coeff(N - i).v;
        if (gi.is_zero()) continue;
        int want = ns - i;
        if (want < 0) continue;
        K g = gi.shifted(b).coeff(want);
        if (scalar_traits<K>::is_zero(g, 0)) continue;
        chi += g * falling_factorial<K>(N - i);
    }
    if (chi.is_zero()) throw CheckError("indicial polynomial vanished: declared order is wrong");
    return chi;
}

// All integer roots with multiplicity, ascending with repeats. Throws
// "non-integral exponent" if anything else remains. Exact scalars evaluate
// exactly; floats accept a root when |p(r)| is small against the coefficient
// scale at r, then deflate and re-verify.
template <class K>
std::vector<long> integer_roots(const Polynomial<K>& p, double tol = kDefaultTol) {
    if (p.is_zero()) throw InputError("integer roots of the zero polynomial");
    Polynomial<K> q = p;
    std::vector<long> roots;
    // Cauchy bound on any root of q
    auto bound = [](const Polynomial<K>& f) -> long {
        double lead = scalar_traits<K>::abs_val(f.leading());
        double m = 0;
        for (int i = 0; i < *f.degree(); ++i) m = std::max(m, scalar_traits<K>::abs_val(f.coeff(i)));
        double b = 1.0 + m / lead;
        if (b > 1e6) throw CheckError("integer root bound too large");
        return long(b) + 1;
    };
    while (q.degree_or(0) > 0) {
        long B = bound(q);
        bool found = false;
        for (long r = -B; r <= B && !found; ++r) {
            K x = scalar_traits<K>::from_int(r);
            K v = q.eval(x);
            bool zero;
            if constexpr (scalar_traits<K>::is_exact) {
                zero = scalar_traits<K>::is_zero(v, 0);
            } else {
                double scale = 1.0, xr = 1.0;
                for (int i = 0; i <= *q.degree(); ++i) {
                    scale += scalar_traits<K>::abs_val(q.coeff(i)) * xr;
                    xr *= std::abs(double(r)) > 1 ? std::abs(double(r)) : 1.0;
                }
                zero = scalar_traits<K>::abs_val(v) <= tol * scale;
            }
            if (zero) {
                roots.push_back(r);
                Polynomial<K> lin(std::vector<K>{K(-x), scalar_traits<K>::one()});
                auto [quo, rem] = q.divmod(lin);
                q = quo;
                found = true;
            }
        }
        if (!found) throw CheckError("non-integral exponent");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace gaudin
