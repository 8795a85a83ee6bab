#include "gaudin/normalize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gaudin {

namespace {

using Cd = std::complex<double>;

std::string fmt_complex(Cd w) {
    double mag = std::abs(w);
    if (std::abs(w.real()) < 1e-14 * mag) w.real(0.0);
    if (std::abs(w.imag()) < 1e-14 * mag) w.imag(0.0);
    std::ostringstream os;
    os.precision(15);
    if (w.imag() == 0.0) {
        os << w.real();
    } else {
        os << w.real() << (w.imag() < 0 ? " - " : " + ") << std::abs(w.imag()) << "i";
    }
    return os.str();
}

// Relative rms distance of the points from their best-fit line.  Points are
// recentred and rescaled first so the answer is scale free.
double line_residual(const std::vector<Cd>& z) {
    if (z.size() <= 2) return 0.0;
    Cd p{0.0, 0.0};
    for (Cd w : z) p += w;
    p /= double(z.size());
    double scale = 0.0;
    for (Cd w : z) scale = std::max(scale, std::abs(w - p));
    if (scale == 0.0) return 0.0;
    Cd second{0.0, 0.0};
    for (Cd w : z) {
        Cd v = (w - p) / scale;
        second += v * v;
    }
    // direction of the total-least-squares line through the centroid
    double theta = 0.5 * std::arg(second);
    Cd dir = std::polar(1.0, theta);
    double sq = 0.0;
    for (Cd w : z) {
        Cd v = (w - p) / scale;
        double off = std::imag(v / dir);
        sq += off * off;
    }
    return std::sqrt(sq / double(z.size()));
}

// Relative rms residual of the best circle-or-line fit A|z|^2 + B x + C y + D = 0.
double circle_residual(const std::vector<Cd>& z) {
    if (z.size() <= 3) return 0.0;
    Cd p{0.0, 0.0};
    for (Cd w : z) p += w;
    p /= double(z.size());
    double scale = 0.0;
    for (Cd w : z) scale = std::max(scale, std::abs(w - p));
    if (scale == 0.0) return 0.0;
    Eigen::Matrix4d gram = Eigen::Matrix4d::Zero();
    for (Cd w : z) {
        Cd v = (w - p) / scale;
        Eigen::Vector4d row(std::norm(v), v.real(), v.imag(), 1.0);
        gram += row * row.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(gram);
    // evaluate the best vector against the rows directly: the eigenvalue
    // itself bottoms out at assembly roundoff, the dot products do not
    Eigen::Vector4d u = es.eigenvectors().col(0);
    double sq = 0.0;
    for (Cd w : z) {
        Cd v = (w - p) / scale;
        Eigen::Vector4d row(std::norm(v), v.real(), v.imag(), 1.0);
        double off = row.dot(u);
        sq += off * off;
    }
    return std::sqrt(sq / double(z.size()));
}

}  // namespace

SpherePoint MobiusMap::apply(const SpherePoint& p) const {
    if (p.infinite) {
        if (std::abs(c) == 0.0) return SpherePoint::infinity();
        return SpherePoint::at(a / c);
    }
    Cd den = c * p.z + d;
    if (std::abs(den) == 0.0) return SpherePoint::infinity();
    return SpherePoint::at((a * p.z + b) / den);
}

MobiusMap MobiusMap::compose(const MobiusMap& outer, const MobiusMap& inner) {
    MobiusMap m;
    m.a = outer.a * inner.a + outer.b * inner.c;
    m.b = outer.a * inner.b + outer.b * inner.d;
    m.c = outer.c * inner.a + outer.d * inner.c;
    m.d = outer.c * inner.b + outer.d * inner.d;
    return m;
}

bool MobiusMap::is_identity(double tol) const {
    return std::abs(c) <= tol && std::abs(b) <= tol && std::abs(a - d) <= tol * std::abs(d) &&
           std::abs(d) > 0.0;
}

NormalizedProblem normalize_fuchsian_data(const std::vector<std::vector<long>>& mu,
                                          const std::vector<SpherePoint>& b, double tol) {
    if (mu.empty() || mu.size() != b.size())
        throw InputError("need one weight sequence per point");
    std::size_t N = mu[0].size();
    if (N == 0) throw InputError("weight sequences must be nonempty");
    for (const auto& seq : mu) {
        if (seq.size() != N) throw InputError("weight sequences must share one length");
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (seq[i] > seq[i - 1]) throw InputError("weight sequences must be nonincreasing");
    }
    int inf_count = 0;
    for (const auto& p : b) inf_count += p.infinite ? 1 : 0;
    if (inf_count > 1) throw InputError("at most one point may be infinite");

    std::vector<Cd> finite;
    for (const auto& p : b)
        if (!p.infinite) finite.push_back(p.z);
    double scale = 1.0;
    for (Cd w : finite)
        for (Cd v : finite) scale = std::max(scale, std::abs(w - v));
    for (std::size_t i = 0; i < finite.size(); ++i)
        for (std::size_t j = i + 1; j < finite.size(); ++j)
            if (std::abs(finite[i] - finite[j]) <= 1e-12 * scale)
                throw InputError("points must be distinct");

    // Concircularity: with an infinite point the finite ones must be
    // collinear, otherwise they must fit one circle or line.
    double resid = inf_count > 0 ? line_residual(finite) : circle_residual(finite);
    if (resid > tol) throw InputError("points do not lie on a common circle or line");

    NormalizedProblem out;
    out.N = int(N);

    // Step 1: send b_0 to infinity.
    MobiusMap invert;  // identity unless b_0 is finite
    bool inverted = false;
    if (!b[0].infinite) {
        invert = MobiusMap{Cd{0.0}, Cd{1.0}, Cd{1.0}, -b[0].z};
        inverted = true;
    }
    std::vector<Cd> img;
    for (std::size_t s = 1; s < b.size(); ++s) {
        SpherePoint q = invert.apply(b[s]);
        if (q.infinite) throw CheckError("a point collided with the inversion centre");
        img.push_back(q.z);
    }
    if (!img.empty() && line_residual(img) > std::sqrt(tol))
        throw CheckError("image points failed to line up after inversion");

    // Step 2: rotate and translate the image line onto the real axis.
    // Skipped when the images are already real.
    double img_scale = 1.0, img_imag = 0.0;
    for (Cd w : img) {
        img_scale = std::max(img_scale, std::abs(w));
        img_imag = std::max(img_imag, std::abs(w.imag()));
    }
    MobiusMap flatten;
    bool flattened = img_imag > tol * img_scale;
    if (flattened) {
        Cd centroid{0.0, 0.0};
        for (Cd w : img) centroid += w;
        centroid /= double(img.size());
        Cd second{0.0, 0.0};
        double sc = 0.0;
        for (Cd w : img) sc = std::max(sc, std::abs(w - centroid));
        for (Cd w : img) {
            Cd v = sc > 0.0 ? (w - centroid) / sc : Cd{0.0};
            second += v * v;
        }
        Cd dir = std::abs(second) > 0.0 ? std::polar(1.0, 0.5 * std::arg(second)) : Cd{1.0};
        flatten = MobiusMap{Cd{1.0} / dir, -centroid / dir, Cd{0.0}, Cd{1.0}};
        out.transcript.push_back({"rotate-translate",
                                  "u -> (u - p)/q with p = " + fmt_complex(centroid) +
                                      ", q = " + fmt_complex(dir)});
    }
    bool moved = inverted || flattened;
    out.map = moved ? MobiusMap::compose(flatten, invert) : MobiusMap{};

    if (inverted)
        out.transcript.insert(out.transcript.begin(),
                              {"invert", "u -> 1/(u - b0) with b0 = " + fmt_complex(b[0].z)});

    for (std::size_t s = 1; s < b.size(); ++s) {
        SpherePoint q = out.map.apply(b[s]);
        if (q.infinite) throw CheckError("a finite point was sent to infinity");
        if (std::abs(q.z.imag()) > std::sqrt(tol) * std::max(1.0, std::abs(q.z)))
            throw CheckError("a normalized point is off the real axis");
        out.points.push_back(q.z.real());
    }

    // Step 3: integer shifts making the finite-point data partitions.  The
    // shift at infinity balances the sum to zero.
    out.shifts.assign(b.size(), 0);
    long total_shift = 0;
    for (std::size_t s = 1; s < b.size(); ++s) {
        long c = -mu[s][N - 1];
        out.shifts[s] = c;
        total_shift += c;
    }
    out.shifts[0] = -total_shift;
    bool shifted = false;
    for (long c : out.shifts) shifted = shifted || c != 0;
    if (shifted) {
        std::string detail = "c = (";
        for (std::size_t s = 0; s < out.shifts.size(); ++s)
            detail += (s ? "," : "") + std::to_string(out.shifts[s]);
        out.transcript.push_back({"shift", detail + ")"});
    }

    long finite_total = 0;
    for (std::size_t s = 1; s < b.size(); ++s) {
        std::vector<long> parts(mu[s]);
        for (long& v : parts) v += out.shifts[s];
        out.Lambda.emplace_back(std::move(parts));
        finite_total += out.Lambda.back().size();
    }
    out.mu0_shifted = mu[0];
    for (long& v : out.mu0_shifted) v += out.shifts[0];

    // Weight at infinity: reverse and negate the shifted sequence.  Data that
    // cannot come from a polynomial-kernel operator is flagged empty.
    if (out.mu0_shifted[0] > 0) {
        out.empty = true;
        out.empty_reason = "leading weight at infinity is positive after shifting";
    } else {
        std::vector<long> lam(out.mu0_shifted.rbegin(), out.mu0_shifted.rend());
        for (long& v : lam) v = -v;
        out.lambda = Partition(std::move(lam));
        if (out.lambda.size() != finite_total) {
            out.empty = true;
            out.empty_reason = "weight at infinity does not balance the finite weights";
        }
    }

    out.identity = !moved && !shifted;
    return out;
}

}  // namespace gaudin
