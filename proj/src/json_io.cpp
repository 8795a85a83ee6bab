#include "gaudin/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gaudin/characters.hpp"

namespace gaudin {

namespace {

long require_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw InputError(what + " must be an integer");
    return v.get<long>();
}

Rat parse_point_value(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_number_float()) return Rat(v.get<double>());  // exact dyadic value
    throw InputError("points must be rational strings or numbers");
}

Partition parse_partition(const Json& v, const std::string& what) {
    if (!v.is_array()) throw InputError(what + " must be an array of integers");
    std::vector<long> parts;
    for (const Json& e : v) parts.push_back(require_int(e, what + " entry"));
    try {
        return Partition(std::move(parts));
    } catch (const InputError& err) {
        throw InputError(what + ": " + err.what());
    }
}

Json partition_json(const Partition& p) {
    Json a = Json::array();
    for (long v : p.parts) a.push_back(v);
    return a;
}

}  // namespace

ParsedProblem parse_problem(const Json& doc) {
    if (!doc.is_object()) throw InputError("problem file must be a JSON object");
    static const std::vector<std::string> known = {"N",   "Lambda", "lambda",       "points",
                                                   "mode", "seed",   "tol",          "max_q_degree",
                                                   "target"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InputError("unknown problem field: " + it.key());
    for (const char* key : {"N", "Lambda", "lambda", "points"})
        if (!doc.contains(key)) throw InputError(std::string("missing problem field: ") + key);

    ParsedProblem out;
    out.spec.N = int(require_int(doc["N"], "N"));
    if (!doc["Lambda"].is_array() || doc["Lambda"].empty())
        throw InputError("Lambda must be a nonempty array of partitions");
    for (const Json& p : doc["Lambda"]) out.spec.Lambda.push_back(parse_partition(p, "Lambda"));
    out.spec.lambda = parse_partition(doc["lambda"], "lambda");
    if (!doc["points"].is_array()) throw InputError("points must be an array");
    for (const Json& p : doc["points"]) out.spec.points.push_back(parse_point_value(p));

    if (doc.contains("mode")) {
        std::string m = doc["mode"].is_string() ? doc["mode"].get<std::string>() : "";
        if (m == "exact")
            out.spec.mode = Mode::Exact;
        else if (m == "float")
            out.spec.mode = Mode::Float;
        else
            throw InputError("mode must be \"exact\" or \"float\"");
    }
    if (doc.contains("seed")) out.spec.seed = std::uint64_t(require_int(doc["seed"], "seed"));
    if (doc.contains("tol")) {
        if (!doc["tol"].is_number()) throw InputError("tol must be a number");
        out.spec.tol = doc["tol"].get<double>();
        out.explicit_tol = true;
    }
    if (doc.contains("max_q_degree"))
        out.spec.max_q_degree = int(require_int(doc["max_q_degree"], "max_q_degree"));
    if (doc.contains("target")) {
        std::string t = doc["target"].is_string() ? doc["target"].get<std::string>() : "";
        if (t == "tensor")
            out.target = FiberTarget::IrreducibleTensor;
        else if (t == "weyl")
            out.target = FiberTarget::WeylModule;
        else
            throw InputError("target must be \"tensor\" or \"weyl\"");
    }
    out.spec.validate();
    return out;
}

ParsedProblem load_problem_file(const std::string& path) {
    return parse_problem(load_json_file(path));
}

NormalizeInput parse_normalize_input(const Json& doc) {
    if (!doc.is_object()) throw InputError("normalize file must be a JSON object");
    for (const char* key : {"mu", "points"})
        if (!doc.contains(key)) throw InputError(std::string("missing normalize field: ") + key);
    NormalizeInput out;
    if (!doc["mu"].is_array() || doc["mu"].empty())
        throw InputError("mu must be a nonempty array of integer sequences");
    for (const Json& seq : doc["mu"]) {
        if (!seq.is_array()) throw InputError("mu entries must be arrays of integers");
        std::vector<long> s;
        for (const Json& v : seq) s.push_back(require_int(v, "mu entry"));
        out.mu.push_back(std::move(s));
    }
    if (!doc["points"].is_array()) throw InputError("points must be an array");
    for (const Json& p : doc["points"]) {
        if (p.is_string()) {
            std::string s = p.get<std::string>();
            if (s == "inf" || s == "infinity" || s == "oo")
                out.points.push_back(SpherePoint::infinity());
            else
                out.points.push_back(SpherePoint::at({to_double(parse_rational(s)), 0.0}));
        } else if (p.is_number()) {
            out.points.push_back(SpherePoint::at({p.get<double>(), 0.0}));
        } else if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
            out.points.push_back(SpherePoint::at({p[0].get<double>(), p[1].get<double>()}));
        } else {
            throw InputError("normalize points must be \"inf\", reals, or [re, im] pairs");
        }
    }
    if (doc.contains("tol")) {
        if (!doc["tol"].is_number()) throw InputError("tol must be a number");
        out.tol = doc["tol"].get<double>();
    }
    return out;
}

NormalizeInput load_normalize_file(const std::string& path) {
    return parse_normalize_input(load_json_file(path));
}

Json json_rational(const Rat& a) { return format_rational(a); }

Json json_complex(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Json json_poly(const Polynomial<Rat>& p, const std::string& var) {
    Json coeffs = Json::array();
    int deg = p.degree_or(0);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(json_rational(p.coeff(i)));
    return Json{{"var", var}, {"coeffs", coeffs}};
}

Json json_poly(const Polynomial<Cplx>& p, const std::string& var) {
    Json coeffs = Json::array();
    int deg = p.degree_or(0);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(json_complex(p.coeff(i)));
    return Json{{"var", var}, {"coeffs", coeffs}};
}

Json problem_to_json(const ProblemSpec& spec, FiberTarget target) {
    Json doc;
    doc["N"] = spec.N;
    Json ll = Json::array();
    for (const Partition& p : spec.Lambda) ll.push_back(partition_json(p));
    doc["Lambda"] = ll;
    doc["lambda"] = partition_json(spec.lambda);
    Json pts = Json::array();
    for (const Rat& b : spec.points) pts.push_back(json_rational(b));
    doc["points"] = pts;
    doc["mode"] = spec.mode == Mode::Exact ? "exact" : "float";
    doc["seed"] = spec.seed;
    doc["tol"] = spec.tol;
    doc["max_q_degree"] = spec.max_q_degree;
    doc["target"] = target == FiberTarget::WeylModule ? "weyl" : "tensor";
    return doc;
}

Json make_envelope(const std::string& kind, const Json& input_echo) {
    Json doc;
    doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    doc["kind"] = kind;
    doc["input"] = input_echo;
    return doc;
}

Json spectrum_document(const ProblemSpec& spec, FiberTarget target,
                       const RestrictedFamily<Rat>& fam,
                       const std::vector<SpectrumEntry>& entries) {
    Json doc = make_envelope("spectrum", problem_to_json(spec, target));
    doc["dimension"] = fam.dim;
    doc["denominator"] = json_poly(fam.den);
    int total = 0;
    Json list = Json::array();
    for (const SpectrumEntry& e : entries) {
        Json item;
        item["multiplicity"] = e.multiplicity;
        item["residual"] = e.residual;
        Json etas = Json::array();
        for (const auto& eta : e.eta) etas.push_back(json_poly(eta));
        item["eta"] = etas;  // h_i = eta_i / denominator
        Json vec = Json::array();
        for (const Cplx& v : e.vec) vec.push_back(json_complex(v));
        item["eigenvector"] = vec;
        list.push_back(item);
        total += e.multiplicity;
    }
    doc["entries"] = list;
    doc["sum_multiplicity"] = total;
    return doc;
}

Json fiber_document(const ProblemSpec& spec, FiberTarget target, const FiberResult& fib,
                    const std::vector<MembershipWitness<Cplx>>& witnesses) {
    Json doc = make_envelope("fiber", problem_to_json(spec, target));
    Json chart;
    chart["N"] = fib.chart.N;
    chart["lambda"] = partition_json(fib.chart.lambda);
    chart["ambient_degree"] = fib.chart.d;
    Json ds = Json::array();
    for (long d : fib.chart.exps) ds.push_back(d);
    chart["degree_set"] = ds;
    Json cs = Json::array();
    for (const ChartCoord& c : fib.chart.coords) cs.push_back(Json{{"i", c.i}, {"j", c.j}});
    chart["coordinates"] = cs;
    doc["chart"] = chart;
    doc["singular_dimension"] = fib.singular_dimension;

    Json pts = Json::array();
    int total = 0;
    for (std::size_t t = 0; t < fib.points.size(); ++t) {
        const FiberPoint& fp = fib.points[t];
        Json item;
        item["multiplicity"] = fp.multiplicity;
        Json xs = Json::array();
        for (const Cplx& v : fp.point.x) xs.push_back(json_complex(v));
        item["coordinates"] = xs;
        Json basis = Json::array();
        for (const auto& f : fp.point.basis()) basis.push_back(json_poly(f));
        item["basis"] = basis;
        item["spectrum_entry"] = fp.entry;
        if (t < witnesses.size()) {
            const MembershipWitness<Cplx>& w = witnesses[t];
            item["member"] = w.member;
            if (!w.member) item["failure"] = w.failure;
            Json exps;
            Json inf = Json::array();
            for (long e : w.infinity_exponents) inf.push_back(e);
            exps["infinity"] = inf;
            Json at = Json::array();
            for (const auto& row : w.point_exponents) {
                Json r = Json::array();
                for (long e : row) r.push_back(e);
                at.push_back(r);
            }
            exps["at_points"] = at;
            item["exponents"] = exps;
        }
        pts.push_back(item);
        total += fp.multiplicity;
    }
    doc["points"] = pts;
    doc["count_with_multiplicity"] = total;
    Json warn = Json::array();
    for (const std::string& w : fib.warnings) warn.push_back(w);
    doc["warnings"] = warn;
    return doc;
}

Json characters_document(int N, const Partition& lambda, int max_degree) {
    Json input;
    input["N"] = N;
    input["lambda"] = partition_json(lambda);
    input["max_degree"] = max_degree;
    Json doc = make_envelope("characters", input);

    Partition lam = lambda.padded(N);
    long shift = 0;
    for (int i = 1; i <= N; ++i) shift += (i - 1) * lam.part(i);
    int d = int(std::max(lam.part(1) + N, lam.size() + N));
    QSeries cell = graded_character_cell(N, lam, d, max_degree);
    // normalized multiplicity series: ch of the singular part over (q)_n
    QSeries weyl = graded_character_weyl(N, lam, max_degree) /
                   q_pochhammer(int(lam.size()), max_degree);
    QSeries shifted = cell * QSeries::monomial(int(std::min<long>(shift, max_degree + 1)), max_degree);

    auto coeffs_json = [&](const QSeries& s) {
        Json a = Json::array();
        for (int i = 0; i <= max_degree; ++i) a.push_back(json_rational(s.coeff(i)));
        return a;
    };
    doc["cell_series"] = coeffs_json(cell);
    doc["weyl_series"] = coeffs_json(weyl);
    doc["shift"] = shift;
    doc["match"] = (weyl == shifted);
    doc["fiber_degree"] = json_rational(standard_tableau_count(N, lam));
    return doc;
}

Json normalize_document(const Json& input_echo, const NormalizedProblem& np) {
    Json doc = make_envelope("normalize", input_echo);
    doc["empty"] = np.empty;
    if (np.empty) {
        doc["empty_reason"] = np.empty_reason;
        doc["dimension"] = 0;
    }
    doc["N"] = np.N;
    if (!np.empty) doc["lambda"] = partition_json(np.lambda);
    Json ll = Json::array();
    for (const Partition& p : np.Lambda) ll.push_back(partition_json(p));
    doc["Lambda"] = ll;
    Json pts = Json::array();
    for (double b : np.points) pts.push_back(b);
    doc["points"] = pts;
    Json shifts = Json::array();
    for (long c : np.shifts) shifts.push_back(c);
    doc["shifts"] = shifts;
    Json mu0 = Json::array();
    for (long v : np.mu0_shifted) mu0.push_back(v);
    doc["mu0_shifted"] = mu0;
    doc["map"] = Json{{"a", json_complex(np.map.a)},
                      {"b", json_complex(np.map.b)},
                      {"c", json_complex(np.map.c)},
                      {"d", json_complex(np.map.d)}};
    Json moves = Json::array();
    for (const NormalizeMove& m : np.transcript)
        moves.push_back(Json{{"kind", m.kind}, {"detail", m.detail}});
    doc["transcript"] = moves;
    doc["identity"] = np.identity;
    return doc;
}

Json error_document(const std::string& kind, const std::string& message) {
    Json doc;
    doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    doc["kind"] = "error";
    doc["error"] = Json{{"kind", kind}, {"message", message}};
    return doc;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string content_hash_hex(const Json& canonical) {
    std::uint64_t h = fnv1a64(canonical.dump());
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string cache_path(const std::string& results_dir, const Json& canonical_input) {
    return results_dir + "/" + content_hash_hex(canonical_input) + ".json";
}

std::vector<std::string> validate_schema(const Json& doc, const Json& schema,
                                         const std::string& where) {
    std::vector<std::string> errs;
    if (!schema.is_object()) return errs;

    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object") return doc.is_object();
            if (t == "array") return doc.is_array();
            if (t == "string") return doc.is_string();
            if (t == "integer") return doc.is_number_integer();
            if (t == "number") return doc.is_number();
            if (t == "boolean") return doc.is_boolean();
            if (t == "null") return doc.is_null();
            return false;
        };
        bool ok = false;
        if (schema["type"].is_string()) {
            ok = matches(schema["type"].get<std::string>());
        } else if (schema["type"].is_array()) {
            for (const Json& t : schema["type"]) ok = ok || matches(t.get<std::string>());
        }
        if (!ok) errs.push_back(where + ": wrong type, expected " + schema["type"].dump());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const Json& v : schema["enum"]) ok = ok || v == doc;
        if (!ok) errs.push_back(where + ": value not in " + schema["enum"].dump());
    }
    if (doc.is_object() && schema.contains("required")) {
        for (const Json& k : schema["required"])
            if (!doc.contains(k.get<std::string>()))
                errs.push_back(where + ": missing required key " + k.get<std::string>());
    }
    if (doc.is_object() && schema.contains("properties")) {
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
            if (doc.contains(it.key())) {
                auto sub = validate_schema(doc[it.key()], it.value(), where + "." + it.key());
                errs.insert(errs.end(), sub.begin(), sub.end());
            }
    }
    if (doc.is_array() && schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
        errs.push_back(where + ": fewer than " + schema["minItems"].dump() + " items");
    if (doc.is_array() && schema.contains("items") && schema["items"].is_object()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            auto sub = validate_schema(doc[i], schema["items"], where + "[" + std::to_string(i) + "]");
            errs.insert(errs.end(), sub.begin(), sub.end());
        }
    }
    return errs;
}

}  // namespace gaudin
