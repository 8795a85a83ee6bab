#pragma once

// Polynomial kernels of differential operators: set up the linear action on
// coefficient vectors below a degree bound and read off the nullspace. The
// basis comes back echelonized by degree: distinct degrees, monic, and each
// basis element has zero coefficient at every other element's degree.

#include "gaudin/diffop.hpp"
#include "gaudin/linalg.hpp"

namespace gaudin {

template <class K>
struct ClearedForm {
    ClearedDiffOp<K> op;
    Polynomial<K> common_den;
};

template <class K>
ClearedForm<K> clear_denominators(const ScalarDiffOp<K>& op, double tol = kDefaultTol) {
    if (op.is_zero()) throw InputError("clearing denominators of the zero operator");
    int N = *op.order();
    Polynomial<K> den = Polynomial<K>::one();
    if constexpr (scalar_traits<K>::is_exact) {
        for (int k = 0; k <= N; ++k)
            if (!op.coeff(k).is_zero()) den = poly_lcm(den, op.coeff(k).v.den());
    } else {
        // candidate: the largest-degree denominator; fall back to the product
        for (int k = 0; k <= N; ++k)
            if (!op.coeff(k).is_zero() && op.coeff(k).v.den().degree_or(0) > den.degree_or(0))
                den = op.coeff(k).v.den();
        bool ok = true;
        for (int k = 0; k <= N && ok; ++k) {
            if (op.coeff(k).is_zero()) continue;
            auto [q, r] = den.divmod(op.coeff(k).v.den());
            ok = r.max_abs() <= tol * std::max(1.0, den.max_abs());
        }
        if (!ok) {
            den = Polynomial<K>::one();
            for (int k = 0; k <= N; ++k)
                if (!op.coeff(k).is_zero()) den = den * op.coeff(k).v.den();
        }
    }
    std::vector<PolyCoeff<K>> c(std::size_t(N) + 1);
    for (int k = 0; k <= N; ++k) {
        if (op.coeff(k).is_zero()) continue;
        const RationalFunction<K>& f = op.coeff(k).v;
        c[std::size_t(k)] = PolyCoeff<K>(f.num() * div_checked(den, f.den(), tol));
    }
    return {ClearedDiffOp<K>(std::move(c)), den};
}

// effective degree under a relative coefficient tolerance (floats only)
template <class K>
int effective_degree(const Polynomial<K>& p, double tol) {
    if constexpr (scalar_traits<K>::is_exact) {
        return p.degree_or(-1);
    } else {
        double scale = p.max_abs();
        if (scale == 0) return -1;
        for (int i = p.degree_or(-1); i >= 0; --i)
            if (scalar_traits<K>::abs_val(p.coeff(i)) > tol * scale) return i;
        return -1;
    }
}

// Echelonize a list of polynomials by degree: result sorted by strictly
// decreasing degree, each monic, with cross coefficients cleared.
template <class K>
std::vector<Polynomial<K>> echelon_by_degree(std::vector<Polynomial<K>> work, double tol = kDefaultTol) {
    std::vector<std::pair<int, Polynomial<K>>> picked;
    for (;;) {
        int best = -1, bestdeg = -1;
        for (std::size_t i = 0; i < work.size(); ++i) {
            int d = effective_degree(work[i], tol);
            if (d > bestdeg) {
                bestdeg = d;
                best = int(i);
            }
        }
        if (best < 0) break;
        Polynomial<K> p = work[std::size_t(best)];
        K inv = scalar_traits<K>::one() / p.coeff(bestdeg);
        p = inv * p;
        if constexpr (!scalar_traits<K>::is_exact) {
            // snap the leading coefficient and kill the noise above it
            std::vector<K> c(p.coeffs().begin(), p.coeffs().begin() + bestdeg + 1);
            c[std::size_t(bestdeg)] = scalar_traits<K>::one();
            p = Polynomial<K>(std::move(c));
        }
        work.erase(work.begin() + best);
        for (Polynomial<K>& q : work) q -= q.coeff(bestdeg) * p;
        picked.emplace_back(bestdeg, std::move(p));
    }
    // cross-reduce: clear the coefficient of every lower pivot degree
    for (std::size_t i = 0; i < picked.size(); ++i)
        for (std::size_t j = i + 1; j < picked.size(); ++j)
            picked[i].second -= picked[i].second.coeff(picked[j].first) * picked[j].second;
    std::vector<Polynomial<K>> out;
    out.reserve(picked.size());
    for (auto& [d, p] : picked) out.push_back(std::move(p));
    return out;
}

// Basis of polynomial solutions of degree < degree_bound, echelonized by
// degree (highest first).
template <class K>
std::vector<Polynomial<K>> polynomial_kernel(const ClearedDiffOp<K>& op, int degree_bound,
                                             double tol = kDefaultTol) {
    if (op.is_zero()) throw InputError("kernel of the zero operator");
    if (degree_bound < 1 || degree_bound > 512) throw InputError("degree bound out of range");
    int N = *op.order();
    std::vector<Polynomial<K>> images;
    images.resize(std::size_t(degree_bound));
    int maxdeg = 0;
    for (int m = 0; m < degree_bound; ++m) {
        // image of u^m: sum_k G_k(u) * m(m-1)...(m-k+1) u^{m-k}
        Polynomial<K> img;
        K fall = scalar_traits<K>::one();
        for (int k = 0; k <= N; ++k) {
            if (k > m && k > 0) break;  // derivative kills the monomial
            if (!op.coeff(k).is_zero() && !scalar_traits<K>::is_zero(fall, 0))
                img += (op.coeff(k).v * fall) * Polynomial<K>::monomial(m - k, scalar_traits<K>::one());
            fall = fall * scalar_traits<K>::from_int(m - k);
        }
        maxdeg = std::max(maxdeg, img.degree_or(0));
        images[std::size_t(m)] = std::move(img);
    }
    Matrix<K> mat(maxdeg + 1, degree_bound);
    for (int m = 0; m < degree_bound; ++m)
        for (int r = 0; r <= images[std::size_t(m)].degree_or(-1); ++r)
            mat(r, m) = images[std::size_t(m)].coeff(r);
    Matrix<K> ker = kernel_basis(mat, tol);
    std::vector<Polynomial<K>> basis;
    for (int c = 0; c < ker.cols(); ++c) {
        std::vector<K> coeffs(std::size_t(degree_bound), scalar_traits<K>::zero());
        for (int r = 0; r < degree_bound; ++r) coeffs[std::size_t(r)] = ker(r, c);
        basis.emplace_back(std::move(coeffs));
    }
    return echelon_by_degree(std::move(basis), tol);
}

template <class K>
std::vector<Polynomial<K>> polynomial_kernel(const ScalarDiffOp<K>& op, int degree_bound,
                                             double tol = kDefaultTol) {
    return polynomial_kernel(clear_denominators(op, tol).op, degree_bound, tol);
}

}  // namespace gaudin
