#pragma once

// The commuting family attached to a module with generating series: expand
// the row determinant of (delta_ij d - e_ji(u)) into a monic operator
// d^N + sum_i B_i(u) d^(N-i), pull the matrix coefficients B_i over the
// common denominator prod_s (u - b_s)^(n_s), and restrict the polynomial
// numerators to an invariant subspace (in practice a singular weight space).
//
// Two structural facts are enforced rather than assumed: each numerator
// A_i = den * B_i must come out polynomial with deg A_i <= n - i, and A_i
// must vanish identically for i > n.

#include "gaudin/kernelsolve.hpp"
#include "gaudin/modulerep.hpp"

namespace gaudin {

template <class K>
struct BetheOperatorFamily {
    int N = 0;
    int n = 0;  // degree of the common denominator
    Polynomial<K> den;
    std::vector<MatSeries<K>> B;           // B_1..B_N on the full module
    std::vector<Matrix<Polynomial<K>>> A;  // numerators A_i = den * B_i
};

// coefficients of the row determinant, highest order first checked monic
template <class K>
BetheOperatorFamily<K> universal_diffop(const ModuleRep<K>& m, double tol = kDefaultTol) {
    if (!m.has_series) throw InputError("module carries no generating series");
    using Op = DifferentialOperator<MatSeries<K>>;
    int N = m.N;
    std::vector<std::vector<Op>> entries;
    entries.resize(std::size_t(N), std::vector<Op>(std::size_t(N)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            std::vector<MatSeries<K>> c;
            c.push_back(-m.e_series(j, i));
            if (i == j) c.push_back(MatSeries<K>::identity(m.dim));
            entries[std::size_t(i - 1)][std::size_t(j - 1)] = Op(std::move(c));
        }
    Op det = rdet(entries);
    if (det.order_or(-1) != N) throw CheckError("determinant lost its leading order");
    if (!det.coeff(N).equals(MatSeries<K>::identity(m.dim)))
        throw CheckError("determinant is not monic");

    BetheOperatorFamily<K> fam;
    fam.N = N;
    fam.den = m.amod;
    fam.n = fam.den.degree_or(0);
    for (int i = 1; i <= N; ++i) {
        MatSeries<K> Bi = det.coeff(N - i);
        Matrix<Polynomial<K>> Ai = Bi.over_common_den(fam.den, tol);
        int maxdeg = -1;
        for (int r = 0; r < Ai.rows(); ++r)
            for (int c = 0; c < Ai.cols(); ++c)
                maxdeg = std::max(maxdeg, effective_degree(Ai(r, c), tol));
        if (i > fam.n && maxdeg >= 0)
            throw CheckError("numerator fails to vanish beyond the denominator degree");
        if (maxdeg > fam.n - i)
            throw CheckError("numerator degree exceeds the structural bound");
        fam.B.push_back(std::move(Bi));
        fam.A.push_back(std::move(Ai));
    }
    return fam;
}

// the same numerators compressed to an invariant subspace
template <class K>
struct RestrictedFamily {
    int N = 0;
    int n = 0;
    int dim = 0;
    Polynomial<K> den;
    std::vector<Matrix<Polynomial<K>>> A;  // A_1..A_N on the subspace basis
};

template <class K>
RestrictedFamily<K> restrict_family(const BetheOperatorFamily<K>& fam, const Subspace<K>& s,
                                    double tol = kDefaultTol) {
    RestrictedFamily<K> r;
    r.N = fam.N;
    r.n = fam.n;
    r.dim = s.dim();
    r.den = fam.den;
    for (const auto& Ai : fam.A) r.A.push_back(compress_poly_matrix(Ai, s, tol));
    return r;
}

inline RestrictedFamily<Cplx> to_complex_family(const RestrictedFamily<Rat>& f) {
    RestrictedFamily<Cplx> r;
    r.N = f.N;
    r.n = f.n;
    r.dim = f.dim;
    r.den = to_complex_poly(f.den);
    for (const auto& Ai : f.A) {
        Matrix<Polynomial<Cplx>> m(Ai.rows(), Ai.cols());
        for (int i = 0; i < Ai.rows(); ++i)
            for (int j = 0; j < Ai.cols(); ++j) m(i, j) = to_complex_poly(Ai(i, j));
        r.A.push_back(std::move(m));
    }
    return r;
}

// coefficient of u^(-i) in the expansion of B_i at infinity
template <class K>
Matrix<K> infinity_coefficient(const BetheOperatorFamily<K>& fam, int i) {
    if (i < 1 || i > fam.N) throw InputError("series index out of range");
    const Matrix<Polynomial<K>>& Ai = fam.A[std::size_t(i - 1)];
    Matrix<K> out(Ai.rows(), Ai.cols());
    for (int r = 0; r < Ai.rows(); ++r)
        for (int c = 0; c < Ai.cols(); ++c) {
            if (Ai(r, c).is_zero()) continue;
            std::vector<K> tail = laurent_at_infinity(Ai(r, c), fam.den, i);
            out(r, c) = tail[std::size_t(i - 1)];
        }
    return out;
}

// B_1(u) = -sum_i e_ii(u) as matrix rational functions
template <class K>
bool first_coefficient_identity(const ModuleRep<K>& m, const BetheOperatorFamily<K>& fam) {
    MatSeries<K> tr;
    for (int i = 1; i <= m.N; ++i) tr += m.e_series(i, i);
    return fam.B[0].equals(-tr);
}

// sum_{i=0..N} B_ii prod_{j=0..N-i-1} (x - j) = Z(x - N + 1), with B_00 = 1
// and B_ii the u^(-i) coefficient of B_i at infinity
template <class K>
bool central_series_identity(const ModuleRep<K>& m, const BetheOperatorFamily<K>& fam) {
    int N = m.N;
    Matrix<Polynomial<K>> lhs(m.dim, m.dim);
    for (int r = 0; r < m.dim; ++r) lhs(r, r) = falling_factorial<K>(N);
    for (int i = 1; i <= N; ++i)
        lhs += falling_factorial<K>(N - i) * to_poly_matrix(infinity_coefficient(fam, i));
    Matrix<Polynomial<K>> z = central_Z(m);
    Matrix<Polynomial<K>> rhs(m.dim, m.dim);
    for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
            if (!z(r, c).is_zero()) rhs(r, c) = z(r, c).shifted(scalar_traits<K>::from_int(1 - N));
    return lhs == rhs;
}

// Z(x) v = prod_i (x - lambda_i + i - 1) v on singular vectors of weight lambda
template <class K>
bool central_eval_identity(const Matrix<Polynomial<K>>& z, const Subspace<K>& sing,
                           const Partition& lambda_in, int N) {
    Partition lambda = lambda_in.padded(N);
    Polynomial<K> scal = Polynomial<K>::one();
    for (int i = 1; i <= N; ++i) {
        K root = scalar_traits<K>::from_int(lambda.part(i) - i + 1);
        scal = scal * Polynomial<K>(std::vector<K>{-root, scalar_traits<K>::one()});
    }
    for (int c = 0; c < sing.dim(); ++c) {
        std::vector<Polynomial<K>> v;
        for (int r = 0; r < sing.E.rows(); ++r) v.push_back(Polynomial<K>(sing.E(r, c)));
        std::vector<Polynomial<K>> img = z.apply(v);
        for (int r = 0; r < sing.E.rows(); ++r)
            if (!(img[std::size_t(r)] == scal * Polynomial<K>(sing.E(r, c)))) return false;
    }
    return true;
}

// sum_i e_ii(u) = (sum_s n_s / (u - b_s)) Id on the whole module
template <class K>
bool trace_series_identity(const ModuleRep<K>& m, const std::vector<K>& points,
                           const std::vector<int>& mult) {
    MatSeries<K> tr;
    for (int i = 1; i <= m.N; ++i) tr += m.e_series(i, i);
    RationalFunction<K> scal;
    for (std::size_t s = 0; s < points.size(); ++s) {
        Polynomial<K> d(std::vector<K>{-points[s], scalar_traits<K>::one()});
        scal += RationalFunction<K>(Polynomial<K>(scalar_traits<K>::from_int(mult[s])), d);
    }
    Matrix<Polynomial<K>> id = to_poly_matrix(Matrix<K>::identity(m.dim, scalar_traits<K>::one()));
    MatSeries<K> rhs(Polynomial<K>(scal.num()) * id, scal.den());
    return tr.equals(rhs);
}

// pairwise commutation of two polynomial matrices, checked coefficientwise
template <class K>
bool commute_poly(const Matrix<Polynomial<K>>& a, const Matrix<Polynomial<K>>& b) {
    return a * b == b * a;
}

}  // namespace gaudin
