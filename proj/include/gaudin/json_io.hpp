#pragma once

// Problem-file ingestion and result-document assembly.  Rationals travel as
// "p/q" strings (decimals are parsed exactly), complex numbers as [re, im]
// pairs, polynomials as lowest-first coefficient lists with an explicit
// variable name.  Documents keep a fixed key order so identical runs
// serialize identically; a 64-bit FNV-1a hash of the canonical input names
// the cache file.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "gaudin/normalize.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/schubert.hpp"
#include "gaudin/spectral.hpp"

namespace gaudin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "gaudin";
inline constexpr const char* kToolVersion = "0.1.0";

// ---- parsing ----

struct ParsedProblem {
    ProblemSpec spec;
    FiberTarget target = FiberTarget::IrreducibleTensor;
    bool explicit_tol = false;  // file carried its own tolerance
};

ParsedProblem parse_problem(const Json& doc);
ParsedProblem load_problem_file(const std::string& path);

struct NormalizeInput {
    std::vector<std::vector<long>> mu;
    std::vector<SpherePoint> points;
    double tol = 1e-9;
};

NormalizeInput parse_normalize_input(const Json& doc);
NormalizeInput load_normalize_file(const std::string& path);

// ---- scalar / polynomial serialization ----

Json json_rational(const Rat& a);
Json json_complex(const Cplx& z);
Json json_poly(const Polynomial<Rat>& p, const std::string& var = "u");
Json json_poly(const Polynomial<Cplx>& p, const std::string& var = "u");

// canonical echo of the parsed problem; the hash input for the cache name
Json problem_to_json(const ProblemSpec& spec, FiberTarget target);

// ---- result documents ----

Json make_envelope(const std::string& kind, const Json& input_echo);
Json spectrum_document(const ProblemSpec& spec, FiberTarget target,
                       const RestrictedFamily<Rat>& fam,
                       const std::vector<SpectrumEntry>& entries);
Json fiber_document(const ProblemSpec& spec, FiberTarget target, const FiberResult& fib,
                    const std::vector<MembershipWitness<Cplx>>& witnesses);
Json characters_document(int N, const Partition& lambda, int max_degree);
Json normalize_document(const Json& input_echo, const NormalizedProblem& np);
Json error_document(const std::string& kind, const std::string& message);

// ---- files and cache ----

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
std::uint64_t fnv1a64(const std::string& bytes);
std::string content_hash_hex(const Json& canonical);
std::string cache_path(const std::string& results_dir, const Json& canonical_input);

// Structural validator for the shipped schemas: supports type, required,
// properties, items, enum and minItems; unknown keywords are ignored.
std::vector<std::string> validate_schema(const Json& doc, const Json& schema,
                                         const std::string& where = "$");

}  // namespace gaudin
