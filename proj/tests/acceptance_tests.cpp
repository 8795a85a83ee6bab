// Acceptance gate: eight numbered criteria, each reported as a single
// [PASS]/[FAIL] line with a short account of what was measured.  Invoke with
// a criterion number to run one (the ctest wiring does this), or with no
// arguments to run all eight.  Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gaudin/bethe.hpp"
#include "gaudin/characters.hpp"
#include "gaudin/kernelsolve.hpp"
#include "gaudin/multipoly.hpp"
#include "gaudin/schubert.hpp"
#include "gaudin/suites.hpp"
#include "gaudin/wronskian.hpp"

#include "oracle_fiber_n2.hpp"

using namespace gaudin;

namespace {

// Tolerances and sizes are fixed here, not taken from flags, so a passing
// gate always certifies the same statement.
constexpr double kCoeffTol = 1e-8;    // coefficient agreement, scaled by magnitude
constexpr double kClusterTol = 1e-6;  // eigenvalue clustering into multiplicities
constexpr double kMatchTol = 1e-6;    // fiber point matching against closed forms
constexpr int kPropertyCases = 100;   // instances per randomized invariant
constexpr long kSeed = 20240901;

struct Outcome {
    bool pass = true;
    std::string note;
};

Polynomial<Rat> P(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rat>(std::move(v));
}

Rat rand_rat(std::mt19937& g) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 2);
    return Rat(num(g)) / Rat(den(g));
}

std::vector<Rat> distinct_points(std::mt19937& g, int n) {
    std::vector<Rat> pts;
    while (int(pts.size()) < n) {
        Rat b = rand_rat(g);
        if (std::find(pts.begin(), pts.end(), b) == pts.end()) pts.push_back(b);
    }
    return pts;
}

// n copies of the vector representation at the given points
ProblemSpec vector_spec(int N, int n, Partition lambda, std::vector<Rat> pts) {
    ProblemSpec s;
    s.N = N;
    s.Lambda.assign(std::size_t(n), Partition({1}));
    s.lambda = std::move(lambda);
    s.points = std::move(pts);
    return s;
}

ProblemSpec one_point_spec(int N, Partition Lambda0, Partition lambda, Rat b) {
    ProblemSpec s;
    s.N = N;
    s.Lambda = {std::move(Lambda0)};
    s.lambda = std::move(lambda);
    s.points = {b};
    return s;
}

long fiber_count(const FiberResult& fib) {
    long c = 0;
    for (const FiberPoint& p : fib.points) c += p.multiplicity;
    return c;
}

// the divisor tuples shared by criteria 3 and 4: every two-row weight up to
// four boxes with ten random rational point tuples each, plus the two
// three-row weights on three points
struct DegreeCase {
    ProblemSpec spec;
    long expect;
};

std::vector<DegreeCase> degree_cases() {
    std::mt19937 g(kSeed);
    std::vector<DegreeCase> out;
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : all_partitions(n, 2))
            for (int rep = 0; rep < 10; ++rep)
                out.push_back({vector_spec(2, n, lam, distinct_points(g, n)),
                               tensor_power_singular_dimension(2, n, lam)});
    for (const Partition& lam : {Partition({1, 1, 1}), Partition({2, 1})})
        for (int rep = 0; rep < 3; ++rep)
            out.push_back({vector_spec(3, 3, lam, distinct_points(g, 3)),
                           tensor_power_singular_dimension(3, 3, lam)});
    return out;
}

// ---- criterion 1: the three-coincident-point example ----
// Exact symbolic Wronskian on the chart of the two-row weight, a doubled
// eigenline over the cube divisor, and the two irreducible intersection
// counts.

Outcome criterion1() {
    Outcome r;
    std::ostringstream note;

    using MP = MultiPoly;
    auto X0 = MP::variable(0), X1 = MP::variable(1), X2 = MP::variable(2);
    auto c = [](long v) { return MP(Rat(v)); };
    Polynomial<MP> f1(std::vector<MP>{X1, c(0), X0, c(1)});
    Polynomial<MP> f2(std::vector<MP>{X2, c(1)});
    Polynomial<MP> w = wronskian<MP>({f1, f2});
    Polynomial<MP> expect(std::vector<MP>{X1, c(-2) * X0 * X2, c(0) - X0 - c(3) * X2, c(-2)});
    bool sym = w.degree_or(-1) == 3;
    for (int i = 0; i <= 3 && sym; ++i) sym = (w.coeff(i) - expect.coeff(i)).is_zero();
    r.pass = r.pass && sym;
    note << (sym ? "symbolic Wronskian exact" : "symbolic Wronskian mismatch");

    // cyclic module over u^3: the singular part is two dimensional and the
    // whole of it is one generalized eigenline
    auto module = build_weyl_tensor<Rat>(2, {Rat(0)}, {3});
    auto fam = universal_diffop(module.rep);
    auto sing = singular_space(module.rep, Partition({2, 1}));
    auto rf = restrict_family(fam, sing);
    auto entries = simultaneous_spectrum(rf, SpectrumOptions{kSeed, kCoeffTol, kClusterTol});
    bool spectral = sing.dim() == 2 && entries.size() == 1 && entries[0].multiplicity == 2 &&
                    entries[0].residual <= kCoeffTol;
    r.pass = r.pass && spectral;
    note << (spectral ? ", one eigenline of multiplicity 2" : ", eigenline structure wrong");

    auto one = fiber_via_bethe(one_point_spec(2, Partition({2, 1}), Partition({2, 1}), Rat(0)),
                               FiberTarget::IrreducibleTensor);
    auto zero = fiber_via_bethe(one_point_spec(2, Partition({3}), Partition({2, 1}), Rat(0)),
                                FiberTarget::IrreducibleTensor);
    bool counts = fiber_count(one) == 1 && zero.points.empty() && zero.singular_dimension == 0;
    r.pass = r.pass && counts;
    note << (counts ? ", intersection counts 1 and 0" : ", intersection counts wrong");

    r.note = note.str();
    return r;
}

// ---- criterion 2: exact operator identities on tensor modules ----

Outcome criterion2() {
    Outcome r;
    SuiteReport report = suite_identities(IdentityBounds{3, 4}, 2);
    r.pass = report.pass;
    std::ostringstream note;
    note << report.lines.size() << " exact identity checks";
    for (const CheckLine& l : report.lines)
        if (!l.pass) note << "; failed: " << l.name;
    r.note = note.str();
    return r;
}

// ---- criterion 3: fiber degree equals the singular dimension ----

Outcome criterion3() {
    Outcome r;
    long cases = 0, fibers = 0;
    std::ostringstream note;
    for (const DegreeCase& dc : degree_cases()) {
        FiberResult fib = fiber_via_bethe(dc.spec, FiberTarget::WeylModule);
        long cnt = fiber_count(fib);
        bool ok = cnt == dc.expect && fib.singular_dimension == dc.expect;
        // the three-row counts are pinned numbers, not just self-consistency
        if (dc.spec.N == 3)
            ok = ok && cnt == (dc.spec.lambda == Partition({1, 1, 1}) ? 1 : 2);
        if (!ok && r.pass) {
            r.pass = false;
            note << "count " << cnt << " vs dimension " << dc.expect << " at lambda="
                 << dc.spec.lambda.str() << "; ";
        }
        ++cases;
        fibers += cnt;
    }
    note << cases << " divisors, " << fibers << " fiber points counted";
    r.note = note.str();
    return r;
}

// ---- criterion 4: every spectrum entry carries a full polynomial kernel
// whose Wronskian is the divisor and whose local exponents are the ones the
// weights prescribe ----

Outcome criterion4() {
    Outcome r;
    long entries_checked = 0;
    std::ostringstream note;
    for (const DegreeCase& dc : degree_cases()) {
        const ProblemSpec& spec = dc.spec;
        long n = spec.n();
        ModuleRep<Rat> m = build_tensor_evaluation(spec.N, spec.Lambda, spec.points, spec.guards);
        auto fam = universal_diffop(m);
        auto sing = singular_space(m, spec.lambda);
        auto rf = restrict_family(fam, sing);
        auto entries = simultaneous_spectrum(rf, SpectrumOptions{kSeed, kCoeffTol, kClusterTol});
        CellChart chart = cell_chart(spec.N, spec.lambda);
        Polynomial<Rat> divisor = spec.a_polynomial();
        for (const SpectrumEntry& e : entries) {
            ++entries_checked;
            auto cleared = cleared_operator_of(e, to_complex_poly(rf.den));
            std::vector<Polynomial<Cplx>> ker;
            std::string fail;
            try {
                ker = polynomial_kernel(cleared, int(n) + spec.N, kCoeffTol);
            } catch (const CheckError& err) {
                fail = err.what();
            }
            bool ok = fail.empty() && int(ker.size()) == spec.N;
            if (ok) {
                auto [wmon, lead] = wronskian_monic(ker);
                double err = 0.0, scale = 1.0;
                for (int i = 0; i <= std::max(wmon.degree_or(0), divisor.degree_or(0)); ++i) {
                    Cplx want = scalar_traits<Rat>::to_complex(divisor.coeff(i));
                    err = std::max(err, std::abs(wmon.coeff(i) - want));
                    scale = std::max(scale, std::abs(want));
                }
                ok = err <= kCoeffTol * scale;
                if (!ok) fail = "Wronskian error " + std::to_string(err);
            }
            if (ok) {
                auto pt = reconstruct_point_from_operator(cleared, chart, kCoeffTol);
                auto wit = membership(pt, spec, kCoeffTol);
                ok = wit.member && wit.fuchs_sum_ok &&
                     wit.point_exponents == wit.expected_point &&
                     wit.infinity_exponents == wit.expected_infinity;
                if (!ok) fail = wit.failure.empty() ? "exponent tables differ" : wit.failure;
            } else if (fail.empty()) {
                fail = "kernel dimension " + std::to_string(ker.size());
            }
            if (!ok && r.pass) {
                r.pass = false;
                note << fail << " at lambda=" << spec.lambda.str() << "; ";
            }
        }
    }
    note << entries_checked << " spectrum entries checked";
    r.note = note.str();
    return r;
}

// ---- criterion 5: real points give real, simple spectra ----

Outcome criterion5() {
    Outcome r;
    std::mt19937 g(kSeed + 5);
    double worst_imag = 0.0;
    std::ostringstream note;
    for (int t = 0; t < 20; ++t) {
        int N = t < 14 ? 2 : 3;
        int n = t < 14 ? 2 + (t % 3) : 3;
        auto lams = all_partitions(n, N);
        Partition lam = lams[std::size_t(t) % lams.size()];
        if (N == 3 && lam.nparts() < 2) lam = Partition({2, 1});  // keep the dimension positive
        ProblemSpec spec = vector_spec(N, n, lam, distinct_points(g, n));
        ModuleRep<Rat> m = build_tensor_evaluation(spec.N, spec.Lambda, spec.points, spec.guards);
        auto rf = restrict_family(universal_diffop(m), singular_space(m, spec.lambda));
        auto entries = simultaneous_spectrum(rf, SpectrumOptions{kSeed, kCoeffTol, kClusterTol});

        long count = 0;
        bool simple = true;
        double imag = 0.0, scale = 1.0;
        for (const SpectrumEntry& e : entries) {
            count += e.multiplicity;
            simple = simple && e.multiplicity == 1;
            for (const auto& eta : e.eta)
                for (int i = 0; i <= eta.degree_or(0); ++i) {
                    imag = std::max(imag, std::abs(eta.coeff(i).imag()));
                    scale = std::max(scale, std::abs(eta.coeff(i)));
                }
        }
        long dim = tensor_power_singular_dimension(N, n, lam);
        bool ok = simple && count == dim && long(entries.size()) == dim && imag <= kCoeffTol * scale;
        worst_imag = std::max(worst_imag, imag / scale);
        if (!ok && r.pass) {
            r.pass = false;
            note << "failure at N=" << N << " lambda=" << lam.str() << " (count " << count
                 << " vs " << dim << ", simple=" << simple << "); ";
        }
    }
    note << "20 real tuples, largest relative imaginary part " << worst_imag;
    r.note = note.str();
    return r;
}

// ---- criterion 6: graded character identity through degree 20 ----

Outcome criterion6() {
    Outcome r;
    long lines = 0;
    std::ostringstream note;
    for (int N = 1; N <= 3; ++N) {
        SuiteReport report = suite_characters(N, 6, 20, 2);
        lines += long(report.lines.size());
        if (!report.pass) {
            r.pass = false;
            for (const CheckLine& l : report.lines)
                if (!l.pass) note << "failed: " << l.name << "; ";
        }
    }
    note << lines << " character checks across ranks 1 to 3";
    r.note = note.str();
    return r;
}

// ---- criterion 7: fibers match closed-form elimination for two rows ----

Outcome criterion7() {
    Outcome r;
    std::mt19937 g(kSeed + 7);
    long points_matched = 0;
    std::ostringstream note;

    auto compare = [&](const ProblemSpec& spec, const Partition& lam) {
        FiberResult fib = fiber_via_bethe(spec, FiberTarget::WeylModule);
        std::vector<Cplx> a;
        for (const Rat& v : spec.a_coefficients()) a.push_back(scalar_traits<Rat>::to_complex(v));
        auto expect = oracle::closed_form_fiber(lam, a);
        bool ok = fib.points.size() == expect.size();
        for (const auto& e : expect) {
            bool found = false;
            for (const FiberPoint& q : fib.points) {
                double dist = 0.0, scale = 1.0;
                for (std::size_t i = 0; i < e.x.size(); ++i) {
                    dist = std::max(dist, std::abs(e.x[i] - q.point.x[i]));
                    scale = std::max(scale, std::abs(e.x[i]));
                }
                if (dist <= kMatchTol * scale) {
                    found = true;
                    ok = ok && q.multiplicity == e.multiplicity;
                }
            }
            ok = ok && found;
            ++points_matched;
        }
        if (!ok && r.pass) {
            r.pass = false;
            note << "mismatch at lambda=" << lam.str() << "; ";
        }
    };

    for (int n = 1; n <= 3; ++n)
        for (const Partition& lam : all_partitions(n, 2))
            for (int rep = 0; rep < 3; ++rep)
                compare(vector_spec(2, n, lam, distinct_points(g, n)), lam);
    // the fully degenerate divisor: one chart point of multiplicity two
    compare(one_point_spec(2, Partition({2, 1}), Partition({2, 1}), Rat(0)), Partition({2, 1}));

    note << points_matched << " closed-form points matched with multiplicity";
    r.note = note.str();
    return r;
}

// ---- criterion 8: randomized invariants, 100 instances each ----

Polynomial<Rat> rand_poly(std::mt19937& g, int maxdeg) {
    std::uniform_int_distribution<long> e(-4, 4);
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<Rat> c;
    int deg = d(g);
    for (int i = 0; i <= deg; ++i) c.emplace_back(e(g));
    return Polynomial<Rat>(std::move(c));
}

ClearedDiffOp<Rat> op_from(std::vector<Polynomial<Rat>> coeffs) {
    std::vector<PolyCoeff<Rat>> c;
    for (auto& p : coeffs) c.emplace_back(std::move(p));
    return ClearedDiffOp<Rat>(std::move(c));
}

bool prop_wronskian(std::mt19937& g) {
    std::vector<Polynomial<Rat>> f{rand_poly(g, 3), rand_poly(g, 3), rand_poly(g, 2)};
    Polynomial<Rat> w = wronskian<Rat>(f);
    std::swap(f[0], f[1]);
    if (wronskian<Rat>(f) != -w) return false;
    std::swap(f[0], f[1]);
    f[0] = f[0] + rand_poly(g, 0) * f[1];  // shear leaves the span alone
    return wronskian<Rat>(f) == w;
}

bool prop_composition(std::mt19937& g) {
    auto a = op_from({rand_poly(g, 2), rand_poly(g, 1)});
    auto b = op_from({rand_poly(g, 2), rand_poly(g, 1), rand_poly(g, 1)});
    auto c = op_from({rand_poly(g, 2), rand_poly(g, 2)});
    if ((a * b) * c != a * (b * c)) return false;
    // commutator of d with multiplication by f is multiplication by f'
    Polynomial<Rat> f = rand_poly(g, 3);
    auto d = op_from({P({}), P({1})});
    auto mf = op_from({f});
    return d * mf - mf * d == op_from({f.derivative()});
}

bool prop_rdet_commutative(std::mt19937& g) {
    // order-zero entries commute, so the row determinant must reduce to the
    // ordinary determinant of the coefficient matrix
    std::uniform_int_distribution<int> kd(2, 3);
    int k = kd(g);
    std::vector<std::vector<Polynomial<Rat>>> m;
    std::vector<std::vector<ClearedDiffOp<Rat>>> ops;
    m.resize(std::size_t(k));
    ops.resize(std::size_t(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            m[std::size_t(i)].push_back(rand_poly(g, 2));
            ops[std::size_t(i)].push_back(op_from({m[std::size_t(i)].back()}));
        }
    std::function<Polynomial<Rat>(std::vector<std::vector<Polynomial<Rat>>>)> det =
        [&](std::vector<std::vector<Polynomial<Rat>>> a) -> Polynomial<Rat> {
        if (a.size() == 1) return a[0][0];
        Polynomial<Rat> acc;
        for (std::size_t j = 0; j < a.size(); ++j) {
            std::vector<std::vector<Polynomial<Rat>>> sub;
            for (std::size_t i = 1; i < a.size(); ++i) {
                std::vector<Polynomial<Rat>> row;
                for (std::size_t l = 0; l < a.size(); ++l)
                    if (l != j) row.push_back(a[i][l]);
                sub.push_back(std::move(row));
            }
            Polynomial<Rat> term = a[0][j] * det(sub);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    auto r = rdet(ops);
    Polynomial<Rat> want = det(m);
    if (want.is_zero()) return r.is_zero();
    return r.order_or(-1) == 0 && r.coeff(0).v == want;
}

bool prop_roundtrip(std::mt19937& g, int t) {
    Partition lam = (t % 3 == 0) ? Partition({2, 1}) : (t % 3 == 1) ? Partition({1, 1}) : Partition({2});
    int N = 2;
    if (t % 10 == 9) {
        lam = Partition({1, 1, 1});
        N = 3;
    }
    CellChart c = cell_chart(N, lam);
    SchubertPoint<Rat> p{c, {}};
    for (std::size_t i = 0; i < c.coords.size(); ++i) p.x.push_back(rand_rat(g));
    FundamentalOperator<Rat> D;
    try {
        D = fundamental_operator(p);
    } catch (const CheckError&) {
        return true;  // degenerate draw: dependent rows, nothing to invert
    }
    return reconstruct_point_from_operator(D.cleared, c).x == p.x;
}

bool prop_commuting_family(std::mt19937& g, int t) {
    int n = 2 + (t % 2);
    ProblemSpec spec = vector_spec(2, n, Partition(n == 2 ? std::vector<long>{1, 1}
                                                          : std::vector<long>{2, 1}),
                                   distinct_points(g, n));
    ModuleRep<Rat> m = build_tensor_evaluation(spec.N, spec.Lambda, spec.points, spec.guards);
    auto rf = restrict_family(universal_diffop(m), singular_space(m, spec.lambda));
    return commute_poly(rf.A[0], rf.A[1]);
}

Outcome criterion8() {
    Outcome r;
    std::ostringstream note;
    struct Prop {
        const char* name;
        std::function<bool(std::mt19937&, int)> run;
    };
    std::vector<Prop> props{
        {"Wronskian antisymmetry and shear invariance",
         [](std::mt19937& g, int) { return prop_wronskian(g); }},
        {"composition associativity and the derivative commutator",
         [](std::mt19937& g, int) { return prop_composition(g); }},
        {"row determinant reduces to the determinant on commuting entries",
         [](std::mt19937& g, int) { return prop_rdet_commutative(g); }},
        {"chart round trip through the fundamental operator",
         [](std::mt19937& g, int t) { return prop_roundtrip(g, t); }},
        {"restricted family matrices commute",
         [](std::mt19937& g, int t) { return prop_commuting_family(g, t); }},
    };
    for (std::size_t s = 0; s < props.size(); ++s) {
        std::mt19937 g(std::uint32_t(kSeed + 80 + long(s)));
        int failures = 0;
        for (int t = 0; t < kPropertyCases; ++t)
            if (!props[s].run(g, t)) ++failures;
        if (failures) {
            r.pass = false;
            note << props[s].name << ": " << failures << " failures; ";
        }
    }
    if (r.pass) note << "5 invariant suites, " << kPropertyCases << " instances each";
    r.note = note.str();
    return r;
}

struct Criterion {
    const char* name;
    Outcome (*run)();
    double budget_s;  // wall-clock bound baked into the pass condition; 0 = none
};

const Criterion kCriteria[] = {
    {"symbolic Wronskian, doubled eigenline, and intersection counts over the cube divisor",
     criterion1, 10.0},
    {"exact operator identities on tensor modules up to rank 3, four points", criterion2, 60.0},
    {"fiber counts equal brute-force singular dimensions", criterion3, 120.0},
    {"spectrum entries carry full kernels matching divisor and exponents", criterion4, 0.0},
    {"real point tuples give real coefficients and simple spectra", criterion5, 0.0},
    {"graded character identity through q-degree 20", criterion6, 30.0},
    {"fibers agree with closed-form elimination for two rows", criterion7, 0.0},
    {"randomized invariants on 100 seeded instances per suite", criterion8, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> todo;
    if (argc > 1) {
        int k = std::atoi(argv[1]);
        if (k < 1 || k > 8) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..8]\n";
            return 2;
        }
        todo.push_back(k);
    } else {
        for (int k = 1; k <= 8; ++k) todo.push_back(k);
    }

    int failures = 0;
    for (int k : todo) {
        const Criterion& c = kCriteria[k - 1];
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("unhandled: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            out.pass = false;
            out.note += "; over the " + std::to_string(int(c.budget_s)) + " s budget";
        }
        std::ostringstream line;
        line.precision(2);
        line << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << c.name << " ("
             << out.note << ", " << std::fixed << secs << " s)";
        std::cout << line.str() << std::endl;
        if (!out.pass) ++failures;
    }
    return failures;
}
