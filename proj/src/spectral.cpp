#include "gaudin/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <numeric>
#include <random>

namespace gaudin {
namespace {

using EMat = Eigen::MatrixXcd;
using EVec = Eigen::VectorXcd;

struct CoeffMat {
    int i;  // which numerator A_i
    int j;  // which power of u
    EMat m;
};

EMat to_eigen(const Matrix<Cplx>& m) {
    EMat e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    return e;
}

std::vector<CoeffMat> coefficient_matrices(const RestrictedFamily<Cplx>& fam) {
    std::vector<CoeffMat> out;
    for (int i = 1; i <= fam.N; ++i) {
        const Matrix<Polynomial<Cplx>>& Ai = fam.A[std::size_t(i - 1)];
        int dmax = -1;
        for (int r = 0; r < Ai.rows(); ++r)
            for (int c = 0; c < Ai.cols(); ++c) dmax = std::max(dmax, Ai(r, c).degree_or(-1));
        for (int j = 0; j <= dmax; ++j) {
            Matrix<Cplx> cm(fam.dim, fam.dim);
            bool any = false;
            for (int r = 0; r < Ai.rows(); ++r)
                for (int c = 0; c < Ai.cols(); ++c) {
                    Cplx v = Ai(r, c).coeff(j);
                    if (v != Cplx(0)) any = true;
                    cm(r, c) = v;
                }
            if (any) out.push_back(CoeffMat{i, j, to_eigen(cm)});
        }
    }
    return out;
}

// columns spanning the numerical null space, via singular values
EMat null_space(const EMat& m, double tol) {
    Eigen::JacobiSVD<EMat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double top = sv.size() > 0 ? sv(0) : 0.0;
    double thr = tol * std::max(1.0, top);
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > thr) ++rank;
    return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

struct DisjointSet {
    std::vector<int> p;
    explicit DisjointSet(int n) : p(std::size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[std::size_t(x)] == x ? x : p[std::size_t(x)] = find(p[std::size_t(x)]); }
    void unite(int a, int b) { p[std::size_t(find(a))] = find(b); }
};

std::vector<std::vector<int>> cluster_eigenvalues(const EVec& vals, double gap) {
    int d = int(vals.size());
    double scale = 1.0;
    for (int k = 0; k < d; ++k) scale = std::max(scale, std::abs(vals(k)));
    DisjointSet ds(d);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (std::abs(vals(a) - vals(b)) <= gap * scale) ds.unite(a, b);
    std::map<int, std::vector<int>> groups;
    for (int k = 0; k < d; ++k) groups[ds.find(k)].push_back(k);
    std::vector<std::vector<int>> out;
    for (auto& kv : groups) out.push_back(std::move(kv.second));
    return out;
}

struct RawEntry {
    std::vector<Cplx> theta;  // aligned with the coefficient matrix list
    std::vector<Cplx> vec;
    int multiplicity;
    double residual;
};

EMat matrix_power(const EMat& base, int e) {
    EMat acc = EMat::Identity(base.rows(), base.cols());
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

std::vector<RawEntry> run_once(const std::vector<CoeffMat>& mats, int dim, long seed,
                               const SpectrumOptions& opt) {
    std::vector<RawEntry> out;
    if (dim == 0) return out;

    std::mt19937_64 rng{std::uint64_t(seed)};
    std::uniform_int_distribution<int> grid(-1000, 1000);
    EMat M = EMat::Zero(dim, dim);
    for (const CoeffMat& cm : mats) M += (grid(rng) / 1000.0) * cm.m;

    Eigen::ComplexEigenSolver<EMat> es(M, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw CheckError("eigenvalue iteration failed to converge");
    EVec vals = es.eigenvalues();

    std::vector<std::vector<int>> groups = cluster_eigenvalues(vals, opt.cluster_gap);
    for (const std::vector<int>& g : groups) {
        int mc = int(g.size());
        Cplx mean(0);
        for (int ix : g) mean += vals(ix);
        mean /= double(mc);

        EMat P = M - mean * EMat::Identity(dim, dim);
        double pn = std::max(1.0, P.cwiseAbs().maxCoeff());
        P /= pn;
        EMat Q = null_space(matrix_power(P, mc), opt.tol);
        if (Q.cols() != mc) throw CheckError("generalized eigenspace has the wrong dimension");

        auto qr = Q.colPivHouseholderQr();
        std::vector<EMat> restricted;
        restricted.reserve(mats.size());
        for (const CoeffMat& cm : mats) restricted.push_back(qr.solve(cm.m * Q));

        std::vector<Cplx> theta(mats.size());
        EMat stacked(int(mats.size()) * mc, mc);
        for (std::size_t t = 0; t < mats.size(); ++t) {
            theta[t] = restricted[t].trace() / double(mc);
            stacked.middleRows(int(t) * mc, mc) =
                restricted[t] - theta[t] * EMat::Identity(mc, mc);
        }
        EMat joint = null_space(stacked, opt.tol);
        if (joint.cols() < 1) throw CheckError("not a joint eigenvector");
        if (joint.cols() > 1) throw CheckError("joint kernel is not one-dimensional");
        EVec v = Q * joint.col(0);

        int lead = 0;
        double best = 0.0;
        for (int r = 0; r < dim; ++r)
            if (std::abs(v(r)) > best * (1.0 + 1e-12)) {
                best = std::abs(v(r));
                lead = r;
            }
        v /= v(lead);

        double resid = 0.0;
        for (std::size_t t = 0; t < mats.size(); ++t) {
            double scale = std::max(1.0, std::abs(theta[t]));
            resid = std::max(resid, (mats[t].m * v - theta[t] * v).cwiseAbs().maxCoeff() / scale);
        }
        if (resid > opt.tol) throw CheckError("not a joint eigenvector");

        RawEntry e;
        e.theta = std::move(theta);
        e.vec.assign(v.data(), v.data() + dim);
        e.multiplicity = mc;
        e.residual = resid;
        out.push_back(std::move(e));
    }

    int total = 0;
    for (const RawEntry& e : out) total += e.multiplicity;
    if (total != dim) throw CheckError("multiplicities fail to cover the space");

    std::sort(out.begin(), out.end(), [](const RawEntry& a, const RawEntry& b) {
        for (std::size_t t = 0; t < a.theta.size(); ++t) {
            if (a.theta[t].real() != b.theta[t].real()) return a.theta[t].real() < b.theta[t].real();
            if (a.theta[t].imag() != b.theta[t].imag()) return a.theta[t].imag() < b.theta[t].imag();
        }
        return false;
    });
    return out;
}

}  // namespace

std::vector<SpectrumEntry> simultaneous_spectrum(const RestrictedFamily<Cplx>& fam,
                                                 const SpectrumOptions& opt) {
    std::vector<CoeffMat> mats = coefficient_matrices(fam);
    if (mats.empty()) {
        if (fam.dim == 0) return {};
        if (fam.dim > 1) throw CheckError("family does not separate the space");
        SpectrumEntry e;
        e.vec = {Cplx(1)};
        e.eta.assign(std::size_t(fam.N), Polynomial<Cplx>());
        return {e};
    }
    std::vector<RawEntry> first = run_once(mats, fam.dim, opt.seed, opt);
    std::vector<RawEntry> second = run_once(mats, fam.dim, opt.seed + 1, opt);

    // the two independent combinations must recover the same blocks
    if (first.size() != second.size()) throw CheckError("non-generic combination");
    double agree = std::max(opt.tol * 100.0, 1e-7);
    std::vector<bool> used(second.size(), false);
    for (const RawEntry& a : first) {
        bool matched = false;
        for (std::size_t s = 0; s < second.size(); ++s) {
            if (used[s] || second[s].multiplicity != a.multiplicity) continue;
            double diff = 0.0, scale = 1.0;
            for (std::size_t t = 0; t < a.theta.size(); ++t) {
                diff = std::max(diff, std::abs(a.theta[t] - second[s].theta[t]));
                scale = std::max(scale, std::abs(a.theta[t]));
            }
            if (diff <= agree * scale) {
                used[s] = true;
                matched = true;
                break;
            }
        }
        if (!matched) throw CheckError("non-generic combination");
    }

    std::vector<SpectrumEntry> out;
    out.reserve(first.size());
    for (const RawEntry& r : first) {
        SpectrumEntry e;
        e.vec = r.vec;
        e.multiplicity = r.multiplicity;
        e.residual = r.residual;
        e.eta.resize(std::size_t(fam.N));
        for (int i = 1; i <= fam.N; ++i) {
            std::vector<Cplx> coeffs(std::size_t(std::max(0, fam.n - i + 1)), Cplx(0));
            for (std::size_t t = 0; t < mats.size(); ++t)
                if (mats[t].i == i) coeffs[std::size_t(mats[t].j)] = r.theta[t];
            e.eta[std::size_t(i - 1)] = Polynomial<Cplx>(std::move(coeffs));
        }
        out.push_back(std::move(e));
    }
    return out;
}

ScalarDiffOp<Cplx> fundamental_operator_of(const SpectrumEntry& e, const Polynomial<Cplx>& den) {
    int N = int(e.eta.size());
    std::vector<RfCoeff<Cplx>> c(std::size_t(N + 1));
    c[std::size_t(N)] = RfCoeff<Cplx>(RationalFunction<Cplx>(Polynomial<Cplx>::one()));
    for (int i = 1; i <= N; ++i)
        if (!e.eta[std::size_t(i - 1)].is_zero())
            c[std::size_t(N - i)] = RfCoeff<Cplx>(RationalFunction<Cplx>(e.eta[std::size_t(i - 1)], den));
    return ScalarDiffOp<Cplx>(std::move(c));
}

ClearedDiffOp<Cplx> cleared_operator_of(const SpectrumEntry& e, const Polynomial<Cplx>& den) {
    int N = int(e.eta.size());
    std::vector<PolyCoeff<Cplx>> c(std::size_t(N + 1));
    c[std::size_t(N)] = PolyCoeff<Cplx>(den);
    for (int i = 1; i <= N; ++i) c[std::size_t(N - i)] = PolyCoeff<Cplx>(e.eta[std::size_t(i - 1)]);
    return ClearedDiffOp<Cplx>(std::move(c));
}

}  // namespace gaudin
