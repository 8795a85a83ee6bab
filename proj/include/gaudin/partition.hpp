#pragma once

// Partitions with at most N parts and the problem description every pipeline
// stage consumes: gl_N rank, a tuple of partitions attached to distinct
// evaluation points, and a target weight.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gaudin/poly.hpp"

namespace gaudin {

struct Partition {
    std::vector<long> parts;  // nonincreasing, nonnegative; trailing zeros allowed

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw InputError("partition parts must be nonnegative");
            if (i > 0 && parts[i] > parts[i - 1]) throw InputError("partition parts must be nonincreasing");
        }
    }
    long size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
    long part(int i) const {  // 1-based, zero beyond the stored length
        if (i < 1) throw InputError("partition index is 1-based");
        return std::size_t(i) <= parts.size() ? parts[std::size_t(i) - 1] : 0;
    }
    int nparts() const {
        int k = int(parts.size());
        while (k > 0 && parts[std::size_t(k) - 1] == 0) --k;
        return k;
    }
    Partition padded(int N) const {
        if (nparts() > N) throw InputError("partition has more than N parts");
        std::vector<long> p(parts.begin(), parts.begin() + nparts());
        p.resize(std::size_t(N), 0);
        return Partition(std::move(p));
    }
    bool operator==(const Partition& o) const {
        int k = std::max(nparts(), o.nparts());
        for (int i = 1; i <= k; ++i)
            if (part(i) != o.part(i)) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

enum class Mode { Exact, Float };

// Guards against accidentally huge desk computations; overridable.
struct SizeGuards {
    long max_tensor_dim = 20000;       // N^n for tensor constructions
    long max_coinvariant_dim = 200000; // N^n * n! for the symmetrized model
    int max_weyl_n = 5;                // total multiplicity in the coinvariant model
};

struct ProblemSpec {
    int N = 0;
    std::vector<Partition> Lambda;  // one partition per point
    Partition lambda;               // target weight
    std::vector<Rat> points;        // distinct evaluation points b_s
    Mode mode = Mode::Exact;
    std::uint64_t seed = 20240901;
    double tol = kDefaultTol;
    int max_q_degree = 20;
    SizeGuards guards;

    int k() const { return int(points.size()); }
    int n() const {
        long s = 0;
        for (const Partition& p : Lambda) s += p.size();
        return int(s);
    }
    std::vector<int> multiplicities() const {
        std::vector<int> m;
        m.reserve(Lambda.size());
        for (const Partition& p : Lambda) m.push_back(int(p.size()));
        return m;
    }
    // prod_s (u - b_s)^{n_s}
    Polynomial<Rat> a_polynomial() const {
        Polynomial<Rat> p = Polynomial<Rat>::one();
        for (std::size_t s = 0; s < points.size(); ++s) {
            Polynomial<Rat> lin(std::vector<Rat>{Rat(-points[s]), Rat(1)});
            p = p * lin.pow(int(Lambda[s].size()));
        }
        return p;
    }
    // e_j of the root multiset: monic Wronskian target u^n + sum (-1)^j a_j u^{n-j}
    std::vector<Rat> a_coefficients() const {
        Polynomial<Rat> p = a_polynomial();
        int deg = *p.degree();
        std::vector<Rat> a(std::size_t(deg), Rat(0));
        for (int j = 1; j <= deg; ++j) a[std::size_t(j - 1)] = (j % 2 ? -p.coeff(deg - j) : p.coeff(deg - j));
        return a;
    }

    void validate() const {
        if (N < 1 || N > 8) throw InputError("N out of range");
        if (Lambda.size() != points.size()) throw InputError("one partition per point required");
        if (Lambda.empty()) throw InputError("at least one point required");
        for (const Partition& p : Lambda) {
            p.validate();
            if (p.nparts() > N) throw InputError("partition " + p.str() + " has more than N parts");
            if (p.size() == 0) throw InputError("empty partition attached to a point");
        }
        lambda.validate();
        if (lambda.nparts() > N) throw InputError("target weight has more than N parts");
        if (lambda.size() != n()) throw InputError("|lambda| must equal the sum of the |lambda^(s)|");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j]) throw InputError("evaluation points must be distinct");
        if (!(tol > 0) || tol > 0.1) throw InputError("tolerance out of range");
        if (max_q_degree < 1 || max_q_degree > 512) throw InputError("q truncation out of range");
    }
};

inline long ipow_checked(int base, int exp, long limit) {
    long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) return limit + 1;
    }
    return v;
}

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// all partitions of n with at most max_parts parts, largest part first,
// in lexicographically decreasing order
inline std::vector<Partition> all_partitions(long n, int max_parts) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long cap, int slots) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (slots == 0) return;
        for (long p = std::min(cap, rest); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n, max_parts);
    return out;
}

}  // namespace gaudin
