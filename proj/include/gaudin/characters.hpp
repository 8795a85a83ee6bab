#pragma once

// Graded characters on both sides of the correspondence: the coordinate ring
// of an intersected cell chart (free generators, one per chart coordinate)
// and the singular part of the module attached to the divisor n[0].

#include <algorithm>
#include <set>

#include "gaudin/partition.hpp"
#include "gaudin/qseries.hpp"

namespace gaudin {

inline std::vector<long> cell_exponents(int N, const Partition& lambda_in) {
    Partition lambda = lambda_in.padded(N);
    std::vector<long> d(std::size_t(N), 0);
    for (int i = 1; i <= N; ++i) d[std::size_t(i - 1)] = lambda.part(i) + N - i;
    return d;  // strictly decreasing
}

// degrees of the free chart coordinates: for row i, j runs over 1..d_i with
// d_i - j not among the exponents
inline std::vector<long> cell_coordinate_degrees(int N, const Partition& lambda) {
    std::vector<long> d = cell_exponents(N, lambda);
    std::set<long> pset(d.begin(), d.end());
    std::vector<long> degs;
    for (long di : d)
        for (long j = 1; j <= di; ++j)
            if (!pset.count(di - j)) degs.push_back(j);
    std::sort(degs.begin(), degs.end());
    return degs;
}

// character of the cell coordinate ring: free generators, one per chart
// coordinate, counted by degree; d is the ambient polynomial degree bound
inline QSeries graded_character_cell(int N, const Partition& lambda, int d, int trunc) {
    if (lambda.part(1) > d - N) throw InputError("ambient degree too small for this weight");
    QSeries ch = QSeries::one(trunc);
    for (long deg : cell_coordinate_degrees(N, lambda))
        ch = ch / (QSeries::one(trunc) - QSeries::monomial(int(deg), trunc));
    return ch;
}

// product form of the graded multiplicity of the weight-lambda singular part
// of the module for the divisor n[0], n = |lambda|
inline QSeries graded_character_weyl(int N, const Partition& lambda_in, int trunc) {
    Partition lambda = lambda_in.padded(N);
    long n = lambda.size();
    if (n > 512) throw InputError("weight size too large for a graded character");
    std::vector<long> d = cell_exponents(N, lambda);
    long e0 = 0;
    for (int i = 1; i <= N; ++i) e0 += (i - 1) * lambda.part(i);
    QSeries ch = QSeries::monomial(int(std::min<long>(e0, trunc + 1)), trunc);
    if (e0 > trunc) return QSeries(trunc);  // entirely above the cutoff
    ch = ch * q_pochhammer(int(n), trunc);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            long gap = d[i] - d[j];
            ch = ch * (QSeries::one(trunc) - QSeries::monomial(int(std::min<long>(gap, trunc + 1)), trunc));
        }
    for (long di : d) ch = ch / q_pochhammer(int(di), trunc);
    return ch;
}

// number of standard tableaux of shape lambda via the exponent product form:
// n! prod_{i<j} (d_i - d_j) / prod_i d_i!
inline Rat standard_tableau_count(int N, const Partition& lambda) {
    std::vector<long> d = cell_exponents(N, lambda);
    Rat r(factorial(int(lambda.size())));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) r *= Rat(d[i] - d[j]);
    for (long di : d)
        for (long t = 2; t <= di; ++t) r /= Rat(t);
    return r;
}

}  // namespace gaudin
