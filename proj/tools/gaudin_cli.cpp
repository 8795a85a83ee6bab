// Command-line front end: spectra of the commuting family, Wronski-map
// fibers, graded characters, the bundled verification suites, and the
// data normalization for points on a circle.  Exit codes: 0 success,
// 1 failed mathematical check, 2 invalid input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "gaudin/bethe.hpp"
#include "gaudin/json_io.hpp"
#include "gaudin/suites.hpp"

namespace {

using namespace gaudin;

// GAUDIN_TOL overrides the built-in default; a tolerance in the problem
// file still wins.
double env_default_tol() {
    const char* v = std::getenv("GAUDIN_TOL");
    if (!v) return kDefaultTol;
    try {
        std::size_t pos = 0;
        double t = std::stod(v, &pos);
        if (pos != std::string(v).size() || !(t > 0) || t > 0.1)
            throw std::invalid_argument("range");
        return t;
    } catch (const std::exception&) {
        throw InputError("GAUDIN_TOL must be a number in (0, 0.1]");
    }
}

struct OutputOptions {
    std::string out_path;
    std::string results_dir;
};

void add_output_options(CLI::App* cmd, OutputOptions& oo) {
    cmd->add_option("--out", oo.out_path, "write the result document here instead of stdout");
    cmd->add_option("--results-dir", oo.results_dir,
                    "also store the document under a content-addressed name");
}

void emit(const Json& doc, const OutputOptions& oo, const Json* canonical_input) {
    if (oo.out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_json_file(oo.out_path, doc);
    if (!oo.results_dir.empty()) {
        Json key = canonical_input ? *canonical_input : doc["input"];
        write_json_file(cache_path(oo.results_dir, key), doc);
    }
}

ModuleRep<Rat> build_module(const ProblemSpec& spec, FiberTarget target) {
    if (target == FiberTarget::WeylModule) {
        std::vector<int> mults = spec.multiplicities();
        bool simple = true;
        for (int m : mults)
            if (m != 1) simple = false;
        if (!simple) return build_weyl_tensor(spec.N, spec.points, mults, spec.guards, spec.tol).rep;
        std::vector<Partition> L(spec.points.size(), Partition{{1}});
        return build_tensor_evaluation(spec.N, L, spec.points, spec.guards);
    }
    return build_tensor_evaluation(spec.N, spec.Lambda, spec.points, spec.guards);
}

Partition parse_lambda_arg(const std::string& s) {
    std::vector<long> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        try {
            parts.push_back(std::stol(s.substr(pos, next - pos)));
        } catch (const std::exception&) {
            throw InputError("lambda must be a comma-separated integer list");
        }
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int run(int argc, char** argv) {
    CLI::App app{"Bethe algebra spectra, Wronski fibers, and verification suites"};
    app.require_subcommand(1);

    std::string file, lambda_arg, target_arg, suite_arg;
    int N = 0, max_degree = 20, jobs = 1, max_n = 4, char_n = 6;
    OutputOptions oo;

    CLI::App* spectrum = app.add_subcommand("spectrum", "joint spectrum of the commuting family");
    spectrum->add_option("--file", file, "problem file")->required();
    add_output_options(spectrum, oo);

    CLI::App* fiber = app.add_subcommand("fiber", "fiber of the Wronski map over the problem divisor");
    fiber->add_option("--file", file, "problem file")->required();
    fiber->add_option("--target", target_arg, "module realization: tensor or weyl");
    add_output_options(fiber, oo);

    CLI::App* characters = app.add_subcommand("characters", "graded character identity for one weight");
    characters->add_option("--N", N, "rank")->required();
    characters->add_option("--lambda", lambda_arg, "weight, e.g. 2,1")->required();
    characters->add_option("--max-degree", max_degree, "q-series truncation");
    add_output_options(characters, oo);

    CLI::App* verify = app.add_subcommand("verify", "run a bundled verification suite");
    verify->add_option("--suite", suite_arg, "identities, characters, correspondence, or all")
        ->required();
    verify->add_option("--file", file, "restrict the correspondence suite to one problem file");
    verify->add_option("--jobs", jobs, "parallelize independent cases");
    verify->add_option("--N", N, "rank bound for identities/characters");
    verify->add_option("--n", max_n, "weight size bound for the identity suite");
    verify->add_option("--char-n", char_n, "weight size bound for the character suite");
    verify->add_option("--max-degree", max_degree, "q-series truncation for the character suite");
    add_output_options(verify, oo);

    CLI::App* normalize = app.add_subcommand("normalize", "move circle data to the real line");
    normalize->add_option("--file", file, "data file with mu sequences and points")->required();
    add_output_options(normalize, oo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << error_document("usage", e.what()).dump(2) << "\n";
        return 2;
    }

    if (jobs < 1 || jobs > 64) throw InputError("jobs must be between 1 and 64");

    if (spectrum->parsed()) {
        ParsedProblem pp = load_problem_file(file);
        if (!pp.explicit_tol) pp.spec.tol = env_default_tol();
        ModuleRep<Rat> m = build_module(pp.spec, pp.target);
        BetheOperatorFamily<Rat> fam = universal_diffop(m, pp.spec.tol);
        Subspace<Rat> sing = singular_space(m, pp.spec.lambda, pp.spec.tol);
        RestrictedFamily<Rat> rf = restrict_family(fam, sing, pp.spec.tol);
        SpectrumOptions opt{long(pp.spec.seed), pp.spec.tol, kClusterGap};
        std::vector<SpectrumEntry> entries = simultaneous_spectrum(rf, opt);
        Json canonical = problem_to_json(pp.spec, pp.target);
        emit(spectrum_document(pp.spec, pp.target, rf, entries), oo, &canonical);
        return 0;
    }
    if (fiber->parsed()) {
        ParsedProblem pp = load_problem_file(file);
        if (!pp.explicit_tol) pp.spec.tol = env_default_tol();
        if (target_arg == "tensor")
            pp.target = FiberTarget::IrreducibleTensor;
        else if (target_arg == "weyl")
            pp.target = FiberTarget::WeylModule;
        else if (!target_arg.empty())
            throw InputError("target must be \"tensor\" or \"weyl\"");
        FiberResult fib = fiber_via_bethe(pp.spec, pp.target);
        std::vector<MembershipWitness<Cplx>> wit;
        for (const FiberPoint& fp : fib.points)
            wit.push_back(membership(fp.point, pp.spec, pp.spec.tol));
        Json canonical = problem_to_json(pp.spec, pp.target);
        emit(fiber_document(pp.spec, pp.target, fib, wit), oo, &canonical);
        for (const MembershipWitness<Cplx>& w : wit)
            if (!w.member) return 1;
        return 0;
    }
    if (characters->parsed()) {
        Json doc = characters_document(N, parse_lambda_arg(lambda_arg), max_degree);
        emit(doc, oo, nullptr);
        return doc["match"].get<bool>() ? 0 : 1;
    }
    if (verify->parsed()) {
        SuiteReport report;
        if (suite_arg == "identities") {
            report = suite_identities(IdentityBounds{N > 0 ? N : 3, max_n}, jobs);
        } else if (suite_arg == "characters") {
            report = suite_characters(N > 0 ? N : 3, char_n, max_degree, jobs);
        } else if (suite_arg == "correspondence") {
            if (!file.empty()) {
                ParsedProblem pp = load_problem_file(file);
                if (!pp.explicit_tol) pp.spec.tol = env_default_tol();
                report = suite_correspondence(pp.spec, pp.target);
            } else {
                report = run_correspondence_suite(jobs);
            }
        } else if (suite_arg == "all") {
            report.suite = "all";
            report.merge(suite_identities(IdentityBounds{N > 0 ? N : 3, max_n}, jobs));
            report.merge(suite_characters(N > 0 ? N : 3, char_n, max_degree, jobs));
            report.merge(run_correspondence_suite(jobs));
        } else {
            throw InputError("suite must be identities, characters, correspondence, or all");
        }
        emit(report_json(report), oo, nullptr);
        return report.pass ? 0 : 1;
    }
    if (normalize->parsed()) {
        Json raw = load_json_file(file);
        NormalizeInput ni = parse_normalize_input(raw);
        NormalizedProblem np = normalize_fuchsian_data(ni.mu, ni.points, ni.tol);
        emit(normalize_document(raw, np), oo, nullptr);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gaudin::InputError& e) {
        std::cout << gaudin::error_document("input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const gaudin::CheckError& e) {
        std::cout << gaudin::error_document("check", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << gaudin::error_document("internal", e.what()).dump(2) << "\n";
        return 1;
    }
}
