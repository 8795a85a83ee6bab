#pragma once

// Bundled verification suites.  Each suite runs a fixed battery of checks
// and returns an itemized report; the CLI maps a failed report to exit
// code 1.  Suites only read their inputs, so independent cases can run on
// separate threads when jobs > 1.

#include <string>
#include <vector>

#include "gaudin/json_io.hpp"
#include "gaudin/partition.hpp"

namespace gaudin {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // counts, residuals, or the serialized offender
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
        pass = pass && ok;
    }
    void merge(const SuiteReport& o) {
        for (const CheckLine& l : o.lines) add(l.name, l.pass, l.detail);
    }
};

struct IdentityBounds {
    int max_N = 3;
    int max_n = 4;
};

// Row-determinant coefficient identities, the central-element series and its
// evaluation on singular vectors, and the diagonal trace identity, all in
// exact arithmetic on tensors of vector-representation evaluations.
SuiteReport suite_identities(const IdentityBounds& bounds = IdentityBounds{}, int jobs = 1);

// Graded character identity between the cell coordinate ring and the
// singular part of the symmetrized tensor module, plus dimension checks at
// q = 1 against brute-force kernels.
SuiteReport suite_characters(int N, int n_max, int q_degree, int jobs = 1);

// Full correspondence battery for one problem: degree bounds, multiplicity
// accounting, kernel and Wronskian matching, exponent tables, membership of
// every fiber point, reality, and transversality expectations.
SuiteReport suite_correspondence(const ProblemSpec& spec, FiberTarget target);

// The default problem list exercised by `verify --suite correspondence`.
std::vector<std::pair<ProblemSpec, FiberTarget>> default_correspondence_specs();

SuiteReport run_correspondence_suite(int jobs = 1);

Json report_json(const SuiteReport& report);

}  // namespace gaudin
