#pragma once

// Joint spectrum of the restricted commuting family. A seeded random linear
// combination of all numerator coefficient matrices is diagonalized once; its
// eigenvalue clusters determine generalized blocks, on which every family
// member acts by a single scalar. Each block carries a unique joint
// eigenline, recovered by a stacked kernel, and the scalars assemble the
// eigenvalue polynomials eta_i(u) with h_i = eta_i / den.
//
// The run is repeated with a second seed; if the two clusterings disagree the
// combination was non-generic and the call fails rather than guess.

#include "gaudin/bethe.hpp"

namespace gaudin {

struct SpectrumOptions {
    long seed = 20240901;
    double tol = kDefaultTol;
    double cluster_gap = kClusterGap;
};

struct SpectrumEntry {
    std::vector<Polynomial<Cplx>> eta;  // numerators of h_1..h_N over den
    std::vector<Cplx> vec;              // joint eigenvector, largest entry 1
    int multiplicity = 1;               // dimension of the generalized block
    double residual = 0.0;              // worst relative eigen-residual
};

std::vector<SpectrumEntry> simultaneous_spectrum(const RestrictedFamily<Cplx>& fam,
                                                 const SpectrumOptions& opt = SpectrumOptions{});

inline std::vector<SpectrumEntry> simultaneous_spectrum(const RestrictedFamily<Rat>& fam,
                                                        const SpectrumOptions& opt = SpectrumOptions{}) {
    return simultaneous_spectrum(to_complex_family(fam), opt);
}

// monic scalar operator d^N + sum_i (eta_i / den) d^(N-i)
ScalarDiffOp<Cplx> fundamental_operator_of(const SpectrumEntry& e, const Polynomial<Cplx>& den);

// the same operator with denominators cleared: den d^N + sum_i eta_i d^(N-i)
ClearedDiffOp<Cplx> cleared_operator_of(const SpectrumEntry& e, const Polynomial<Cplx>& den);

}  // namespace gaudin
