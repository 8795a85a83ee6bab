#pragma once

// Data-level normalization of Fuchsian exponent problems.  Input: integer
// weight sequences attached to k+1 distinct points on a common circle or
// line in the Riemann sphere.  A Mobius change of variable sends the
// distinguished point b_0 to infinity and the others to the real axis, then
// integer shifts c_s (summing to zero) turn the finite-point sequences into
// partitions and determine the weight at infinity.  Every move is recorded
// so the caller can audit or replay the transformation.

#include <complex>
#include <string>
#include <vector>

#include "gaudin/partition.hpp"

namespace gaudin {

struct SpherePoint {
    bool infinite = false;
    std::complex<double> z{0.0, 0.0};

    static SpherePoint at(std::complex<double> w) { return SpherePoint{false, w}; }
    static SpherePoint infinity() { return SpherePoint{true, {0.0, 0.0}}; }
};

// u -> (a u + b) / (c u + d), coefficients kept as a 2x2 complex matrix.
struct MobiusMap {
    std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

    SpherePoint apply(const SpherePoint& p) const;
    static MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);
    bool is_identity(double tol) const;
};

struct NormalizeMove {
    std::string kind;    // "invert", "rotate-translate" or "shift"
    std::string detail;  // parameters in readable form
};

struct NormalizedProblem {
    // Marker for data whose solution set is empty; the shifted sequences are
    // still reported so the caller can see why.
    bool empty = false;
    std::string empty_reason;

    int N = 0;
    Partition lambda;                // weight at infinity (valid iff !empty)
    std::vector<Partition> Lambda;   // partitions at the finite points
    std::vector<double> points;      // finite points after the move, on the real axis
    std::vector<long> shifts;        // c_0..c_k, sum zero
    std::vector<long> mu0_shifted;   // weight sequence at infinity after shifting
    MobiusMap map;                   // composite change of variable
    std::vector<NormalizeMove> transcript;
    bool identity = false;           // true when nothing moved and no shift was needed
};

// mu[s] is the nonincreasing integer sequence at b[s]; all must share one
// length N.  b[0] is the point sent to infinity.  tol is the relative
// residual allowed by the circle/line fit.
NormalizedProblem normalize_fuchsian_data(const std::vector<std::vector<long>>& mu,
                                          const std::vector<SpherePoint>& b,
                                          double tol = 1e-9);

}  // namespace gaudin
