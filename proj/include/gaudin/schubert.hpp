#pragma once

// Cells of N-dimensional polynomial spaces with prescribed degrees
// d_i = lambda_i + N - i, charted by the free coefficients of their unique
// degree-echelonized basis. The Wronski map sends a chart point to the
// coefficient sequence of its monic Wronskian; going the other way, a scalar
// operator with polynomial kernel is folded back into chart coordinates.
// Membership of a space in an intersection problem is decided by exponent
// data at the marked points and at infinity, with normalized local frames as
// the certificate. The fiber of the Wronski map over a problem's divisor is
// computed through the spectrum of the commuting family.

#include "gaudin/characters.hpp"
#include "gaudin/coinvariant.hpp"
#include "gaudin/indicial.hpp"
#include "gaudin/kernelsolve.hpp"
#include "gaudin/spectral.hpp"
#include "gaudin/wronskian.hpp"

namespace gaudin {

inline constexpr double kPointMergeTol = 1e-6;

template <class K>
K scalar_from_rat(const Rat& r) {
    if constexpr (std::is_same_v<K, Rat>)
        return r;
    else
        return scalar_traits<Rat>::to_complex(r);
}

struct ChartCoord {
    int i;  // 1-based row: the coefficient sits in f_i
    int j;  // offset: f_i = u^{d_i} + ... + x_{ij} u^{d_i - j} + ...
};

struct CellChart {
    int N = 0;
    int d = 0;  // ambient space: polynomials of degree < d
    Partition lambda;
    Partition lambda_bar;  // dual weight of the cell in the ambient space
    std::vector<long> exps;
    std::vector<ChartCoord> coords;
};

// chart of the cell with exponents d_i; d < 0 picks the smallest ambient
// degree that holds both the cell and every fiber of its Wronski divisor
inline CellChart cell_chart(int N, const Partition& lambda_in, int d = -1) {
    CellChart c;
    c.N = N;
    c.lambda = lambda_in.padded(N);
    long n = c.lambda.size();
    if (d < 0) d = int(std::max(c.lambda.part(1) + N, n + N));
    if (c.lambda.part(1) > d - N) throw InputError("ambient degree too small for this weight");
    c.d = d;
    c.exps = cell_exponents(N, c.lambda);
    std::vector<long> dual;
    for (int i = N; i >= 1; --i) dual.push_back(d - N - c.lambda.part(i));
    c.lambda_bar = Partition{dual};
    std::set<long> pset(c.exps.begin(), c.exps.end());
    for (int i = 1; i <= N; ++i) {
        long di = c.exps[std::size_t(i - 1)];
        for (long j = 1; j <= di; ++j)
            if (!pset.count(di - j)) c.coords.push_back(ChartCoord{i, int(j)});
    }
    if (long(c.coords.size()) != n) throw CheckError("chart coordinate count is off");
    return c;
}

template <class K>
struct SchubertPoint {
    CellChart chart;
    std::vector<K> x;  // aligned with chart.coords

    std::vector<Polynomial<K>> basis() const {
        if (x.size() != chart.coords.size())
            throw InputError("coordinate count does not match the chart");
        std::vector<Polynomial<K>> fs;
        for (int i = 1; i <= chart.N; ++i) {
            long di = chart.exps[std::size_t(i - 1)];
            std::vector<K> cf(std::size_t(di) + 1, scalar_traits<K>::zero());
            cf[std::size_t(di)] = scalar_traits<K>::one();
            for (std::size_t t = 0; t < chart.coords.size(); ++t)
                if (chart.coords[t].i == i)
                    cf[std::size_t(di - chart.coords[t].j)] = x[t];
            fs.emplace_back(std::move(cf));
        }
        return fs;
    }
};

template <class K>
struct WronskiImage {
    Polynomial<K> monic;  // u^n + sum_s (-1)^s a_s u^{n-s}
    std::vector<K> a;
};

template <class K>
WronskiImage<K> wronski_map(const SchubertPoint<K>& p, double tol = kDefaultTol) {
    auto [mon, lead] = wronskian_monic(p.basis());
    K expected = scalar_traits<K>::one();
    for (std::size_t i = 0; i < p.chart.exps.size(); ++i)
        for (std::size_t j = i + 1; j < p.chart.exps.size(); ++j)
            expected = expected * scalar_traits<K>::from_int(p.chart.exps[j] - p.chart.exps[i]);
    if (!scalar_traits<K>::near(lead, expected, tol * scalar_traits<K>::abs_val(expected)))
        throw CheckError("leading factor of the Wronskian is off");
    long n = p.chart.lambda.size();
    if (mon.degree_or(-1) != int(n)) throw CheckError("Wronskian degree is off");
    WronskiImage<K> w;
    w.monic = std::move(mon);
    for (long s = 1; s <= n; ++s) {
        K c = w.monic.coeff(int(n - s));
        w.a.push_back(s % 2 ? -c : c);
    }
    return w;
}

template <class K>
struct FundamentalOperator {
    ScalarDiffOp<K> op;        // monic, kernel = the space
    ClearedDiffOp<K> cleared;  // polynomial coefficients G_i, deg G_i = n - i
    Polynomial<K> wronskian;   // monic
};

// determinant of a square matrix of polynomials by permutation expansion
template <class K>
Polynomial<K> poly_det(const std::vector<std::vector<Polynomial<K>>>& a) {
    int n = int(a.size());
    std::vector<int> perm(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    Polynomial<K> acc;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inv;
        Polynomial<K> term = Polynomial<K>::one();
        for (int i = 0; i < n; ++i) term = term * a[std::size_t(i)][std::size_t(perm[std::size_t(i)])];
        acc += inv % 2 ? Polynomial<K>(-term) : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// monic operator with kernel exactly the span of the basis; the cleared form
// comes from the bordered-Wronskian minors G_i = (-1)^i M_{N-i}, rescaled so
// the top coefficient is the monic Wronskian
template <class K>
FundamentalOperator<K> fundamental_operator(const SchubertPoint<K>& p, double tol = kDefaultTol) {
    std::vector<Polynomial<K>> fs = p.basis();
    int N = p.chart.N;
    long n = p.chart.lambda.size();
    if (N > 5) throw InputError("operator construction limited to five functions");

    // derivative table: row i has f_i, f_i', ..., f_i^(N)
    std::vector<std::vector<Polynomial<K>>> table{std::size_t(N)};
    for (int i = 0; i < N; ++i) {
        Polynomial<K> cur = fs[std::size_t(i)];
        for (int k = 0; k <= N; ++k) {
            table[std::size_t(i)].push_back(cur);
            cur = cur.derivative();
        }
    }
    auto minor_skipping = [&](int j) {
        std::vector<std::vector<Polynomial<K>>> m{std::size_t(N)};
        for (int i = 0; i < N; ++i)
            for (int k = 0; k <= N; ++k)
                if (k != j) m[std::size_t(i)].push_back(table[std::size_t(i)][std::size_t(k)]);
        return poly_det(m);
    };

    std::vector<Polynomial<K>> G(std::size_t(N) + 1);
    for (int i = 0; i <= N; ++i) {
        Polynomial<K> m = minor_skipping(N - i);
        G[std::size_t(i)] = i % 2 ? Polynomial<K>(-m) : m;
    }
    K lead = G[0].coeff(int(n));
    if (scalar_traits<K>::is_zero(lead, tol * G[0].max_abs()))
        throw CheckError("Wronskian lost its leading term");
    K inv = scalar_traits<K>::one() / lead;
    for (auto& g : G) g = inv * g;

    // deg G_i = n - i unless the coefficient vanishes outright, which happens
    // when low-degree monomials sit in the kernel (trailing zero weight parts)
    for (int i = 0; i <= N; ++i) {
        int got = effective_degree(G[std::size_t(i)], tol);
        if (got >= 0 && got != int(n) - i)
            throw CheckError("cleared coefficient degree is off");
    }
    if (effective_degree(G[0], tol) != int(n)) throw CheckError("Wronskian degree is off");

    FundamentalOperator<K> out;
    out.wronskian = G[0];
    std::vector<PolyCoeff<K>> cc(std::size_t(N) + 1);
    for (int i = 0; i <= N; ++i) cc[std::size_t(N - i)] = PolyCoeff<K>(G[std::size_t(i)]);
    out.cleared = ClearedDiffOp<K>(std::move(cc));

    std::vector<RfCoeff<K>> rc(std::size_t(N) + 1);
    rc[std::size_t(N)] = RfCoeff<K>(RationalFunction<K>(Polynomial<K>::one()));
    for (int i = 1; i <= N; ++i)
        if (!G[std::size_t(i)].is_zero())
            rc[std::size_t(N - i)] = RfCoeff<K>(RationalFunction<K>(G[std::size_t(i)], G[0]));
    out.op = ScalarDiffOp<K>(std::move(rc));

    // the first coefficient must be -W' over W and the kernel must be the span
    Polynomial<K> logd = G[1] + G[0].derivative();
    bool logd_ok = scalar_traits<K>::is_exact
                       ? logd.is_zero()
                       : logd.max_abs() <= 100 * tol * std::max(1.0, G[0].derivative().max_abs());
    if (!logd_ok) throw CheckError("first coefficient disagrees with the log-derivative");
    for (const Polynomial<K>& f : fs) {
        Polynomial<K> img = apply_op(out.cleared, f);
        if constexpr (scalar_traits<K>::is_exact) {
            if (!img.is_zero()) throw CheckError("operator fails to kill its own kernel");
        } else {
            double scale = std::max(1.0, out.wronskian.max_abs() * f.max_abs());
            if (img.max_abs() > tol * scale * 100)
                throw CheckError("operator fails to kill its own kernel");
        }
    }
    return out;
}

template <class K>
std::vector<long> exponents_at_infinity(const ScalarDiffOp<K>& op, double tol = kDefaultTol) {
    std::vector<long> roots = integer_roots(indicial_at_infinity(op, tol), tol);
    for (long& r : roots) r = -r;
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <class K>
std::vector<long> exponents_at_point(const ClearedDiffOp<K>& op, const K& b, int local_order,
                                     double tol = kDefaultTol) {
    std::vector<long> roots = integer_roots(indicial_at_point(op, b, local_order), tol);
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <class K>
struct LocalExpansionFrame {
    K b;
    Matrix<K> M;                     // coefficients of the f_i at the exponent orders
    std::vector<std::vector<K>> g;  // normalized expansions: g[j] has a lone 1 at exponent e_j
};

template <class K>
struct MembershipWitness {
    bool member = false;
    std::string failure;  // empty when member
    std::vector<std::vector<long>> point_exponents;
    std::vector<std::vector<long>> expected_point;
    std::vector<long> infinity_exponents;
    std::vector<long> expected_infinity;
    std::vector<LocalExpansionFrame<K>> frames;
    bool fuchs_sum_ok = false;
};

// expected exponents at a marked point with weight mu: mu_{N-j+1} + j - 1
inline std::vector<long> marked_point_exponents(int N, const Partition& mu_in) {
    Partition mu = mu_in.padded(N);
    std::vector<long> e;
    for (int j = 1; j <= N; ++j) e.push_back(mu.part(N - j + 1) + j - 1);
    return e;  // ascending
}

template <class K>
MembershipWitness<K> membership(const SchubertPoint<K>& p, const ProblemSpec& spec,
                                double tol = kDefaultTol) {
    if (p.chart.N != spec.N) throw InputError("rank mismatch between point and problem");
    WronskiImage<K> w = wronski_map(p, tol);
    Polynomial<K> target;
    {
        Polynomial<Rat> a = spec.a_polynomial();
        std::vector<K> cf;
        for (int t = 0; t <= a.degree_or(0); ++t) cf.push_back(scalar_from_rat<K>(a.coeff(t)));
        target = Polynomial<K>(std::move(cf));
    }
    {
        Polynomial<K> diff = w.monic - target;
        if (diff.max_abs() > tol * std::max(1.0, target.max_abs()))
            throw InputError("the space does not lie over the declared divisor");
    }

    FundamentalOperator<K> D = fundamental_operator(p, tol);
    MembershipWitness<K> out;
    std::vector<int> mults = spec.multiplicities();
    std::vector<Polynomial<K>> fs = p.basis();
    int N = spec.N;
    long d1 = p.chart.exps[0];

    bool all_match = true;
    for (std::size_t s = 0; s < spec.points.size(); ++s) {
        K b = scalar_from_rat<K>(spec.points[s]);
        std::vector<long> got = exponents_at_point(D.cleared, b, mults[s], tol);
        std::vector<long> want = marked_point_exponents(N, spec.Lambda[s]);
        out.point_exponents.push_back(got);
        out.expected_point.push_back(want);
        if (got != want) {
            all_match = false;
            if (out.failure.empty())
                out.failure = "exponents differ at marked point " + std::to_string(s + 1);
        }
    }
    out.infinity_exponents = exponents_at_infinity(D.op, tol);
    for (int j = 1; j <= N; ++j)
        out.expected_infinity.push_back(-(p.chart.lambda.part(j) + N - j));
    if (out.infinity_exponents != out.expected_infinity) {
        all_match = false;
        if (out.failure.empty()) out.failure = "exponents differ at infinity";
    }

    // Fuchs sum over the actual data: marked points against their ordinary
    // offset, plus infinity, must balance to zero
    long fsum = 0;
    for (const auto& e : out.point_exponents)
        for (long v : e) fsum += v;
    for (long v : out.infinity_exponents) fsum += v;
    long k = long(spec.points.size());
    out.fuchs_sum_ok = (fsum == (k - 1) * long(N) * (N - 1) / 2);

    if (!all_match) return out;

    // normalized local frames: row-reduce the Taylor coefficients at b_s; the
    // pivot columns are the valuation orders and must reproduce the exponents
    for (std::size_t s = 0; s < spec.points.size(); ++s) {
        K b = scalar_from_rat<K>(spec.points[s]);
        Matrix<K> g{N, int(d1) + 1};
        for (int i = 0; i < N; ++i) {
            Polynomial<K> loc = fs[std::size_t(i)].shifted(b);
            for (int t = 0; t <= loc.degree_or(-1); ++t) g(i, t) = loc.coeff(t);
        }
        Matrix<K> raw = g;
        std::vector<int> piv = rref(g, tol);
        std::vector<long> vals(piv.begin(), piv.end());
        if (vals != out.point_exponents[std::size_t(s)])
            throw CheckError("tolerance-ambiguous exponent data at a marked point");
        LocalExpansionFrame<K> fr;
        fr.b = b;
        fr.M = Matrix<K>(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) fr.M(i, j) = raw(i, int(vals[std::size_t(j)]));
        for (int r = 0; r < N; ++r) {
            std::vector<K> row;
            for (int t = 0; t <= int(d1); ++t) row.push_back(g(r, t));
            fr.g.push_back(std::move(row));
        }
        out.frames.push_back(std::move(fr));
    }
    out.member = true;
    return out;
}

// fold an operator's polynomial kernel back into chart coordinates
template <class K>
SchubertPoint<K> reconstruct_point_from_operator(const ClearedDiffOp<K>& op, const CellChart& chart,
                                                 double tol = kDefaultTol) {
    std::vector<Polynomial<K>> basis = polynomial_kernel(op, int(chart.exps[0]) + 1, tol);
    if (int(basis.size()) != chart.N)
        throw CheckError("kernel dimension differs from the rank");
    for (int i = 0; i < chart.N; ++i)
        if (basis[std::size_t(i)].degree_or(-1) != int(chart.exps[std::size_t(i)]))
            throw CheckError("kernel misses the chart");
    SchubertPoint<K> p;
    p.chart = chart;
    for (const ChartCoord& c : chart.coords) {
        long di = chart.exps[std::size_t(c.i - 1)];
        p.x.push_back(basis[std::size_t(c.i - 1)].coeff(int(di - c.j)));
    }
    return p;
}

enum class FiberTarget { WeylModule, IrreducibleTensor };

struct FiberPoint {
    SchubertPoint<Cplx> point;
    int multiplicity = 1;
    int entry = 0;  // index into the spectrum entries
};

struct FiberResult {
    CellChart chart;
    long singular_dimension = 0;
    std::vector<FiberPoint> points;
    std::vector<SpectrumEntry> entries;
    std::vector<std::string> warnings;
};

// Fiber of the Wronski map over prod (u - b_s)^{n_s} at weight lambda,
// computed from the joint spectrum on the singular space of the chosen
// module. With the Weyl target and all multiplicities 1 the module is built
// directly as the tensor of vector evaluations, which realizes the same
// action.
inline FiberResult fiber_via_bethe(const ProblemSpec& spec, FiberTarget target) {
    spec.validate();
    std::vector<int> mults = spec.multiplicities();
    ModuleRep<Rat> module;
    if (target == FiberTarget::WeylModule) {
        bool simple = true;
        for (int m : mults)
            if (m != 1) simple = false;
        if (simple) {
            std::vector<Partition> L(spec.points.size(), Partition{{1}});
            module = build_tensor_evaluation(spec.N, L, spec.points, spec.guards);
        } else {
            module = build_weyl_tensor(spec.N, spec.points, mults, spec.guards, spec.tol).rep;
        }
    } else {
        module = build_tensor_evaluation(spec.N, spec.Lambda, spec.points, spec.guards);
    }

    Subspace<Rat> sing = singular_space(module, spec.lambda, spec.tol);
    FiberResult out;
    out.chart = cell_chart(spec.N, spec.lambda);
    out.singular_dimension = sing.dim();
    if (sing.dim() == 0) return out;

    BetheOperatorFamily<Rat> fam = universal_diffop(module, spec.tol);
    RestrictedFamily<Cplx> rf = to_complex_family(restrict_family(fam, sing, spec.tol));
    SpectrumOptions opt;
    opt.seed = spec.seed;
    opt.tol = spec.tol;
    out.entries = simultaneous_spectrum(rf, opt);

    Polynomial<Cplx> target_a = to_complex_poly(spec.a_polynomial());
    for (std::size_t e = 0; e < out.entries.size(); ++e) {
        ClearedDiffOp<Cplx> cleared = cleared_operator_of(out.entries[e], rf.den);
        SchubertPoint<Cplx> pt = reconstruct_point_from_operator(cleared, out.chart, spec.tol);
        WronskiImage<Cplx> w = wronski_map(pt, spec.tol);
        if ((w.monic - target_a).max_abs() > 100 * spec.tol * std::max(1.0, target_a.max_abs()))
            throw CheckError("fiber point misses the divisor");
        bool merged = false;
        for (FiberPoint& q : out.points) {
            double dist = 0.0, scale = 1.0;
            for (std::size_t t = 0; t < pt.x.size(); ++t) {
                dist = std::max(dist, std::abs(pt.x[t] - q.point.x[t]));
                scale = std::max(scale, std::abs(pt.x[t]));
            }
            if (dist <= kPointMergeTol * scale) {
                q.multiplicity += out.entries[e].multiplicity;
                out.warnings.push_back("two spectrum entries landed on the same chart point; multiplicities merged");
                merged = true;
                break;
            }
        }
        if (!merged)
            out.points.push_back(FiberPoint{std::move(pt), out.entries[std::size_t(e)].multiplicity, int(e)});
    }
    long total = 0;
    for (const FiberPoint& q : out.points) total += q.multiplicity;
    if (total != sing.dim()) throw CheckError("fiber multiplicities fail to cover the singular space");
    return out;
}

}  // namespace gaudin
