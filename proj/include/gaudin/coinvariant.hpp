#pragma once

// The cyclic module attached to a divisor: quotient algebra
// A = K[z_1..z_n]/(p^(1)(z_1), ..., p^(n)(z_n)) with the triangular relations
// p^(1) = a, p^(s+1) = p^(s)/(u - z_s), carrying the regular S_n action;
// the module itself is the S_n-invariant part of V^{otimes n} tensor A.

#include <map>

#include "gaudin/modulerep.hpp"

namespace gaudin {

template <class K>
using Mono = std::map<std::vector<int>, K>;  // exponent tuple -> coefficient

namespace detail {

template <class K>
void mono_add(Mono<K>& m, const std::vector<int>& e, const K& c) {
    auto it = m.find(e);
    if (it == m.end()) {
        if (!scalar_traits<K>::is_zero(c, 0)) m.emplace(e, c);
    } else {
        it->second += c;
        if (scalar_traits<K>::is_zero(it->second, 0)) m.erase(it);
    }
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) p[std::size_t(i)] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace detail

template <class K>
struct CoinvariantAlgebra {
    int n = 0;
    long dim = 0;  // n!
    Polynomial<K> a;
    // rewriting rules: z_s^{n-s+1} = sum of (monomial, coefficient), monomials
    // involving z_1..z_s only, staircase in every variable
    std::vector<std::vector<std::pair<std::vector<int>, K>>> rhs;
    detail::MixedRadix radix{{}};

    CoinvariantAlgebra(int n_, Polynomial<K> a_) : n(n_), a(std::move(a_)) {
        if (n < 1) throw InputError("need at least one variable");
        if (a.degree_or(-1) != n) throw CheckError("polynomial degree must match the variable count");
        dim = factorial(n);
        std::vector<long> dims;
        for (int s = 1; s <= n; ++s) dims.push_back(n - s + 1);
        radix = detail::MixedRadix(dims);

        // synthetic division chain: coefficients live in K[z_1..z_{s-1}]
        std::vector<Mono<K>> cur(std::size_t(n) + 1);
        std::vector<int> zero_e(std::size_t(n), 0);
        for (int i = 0; i <= n; ++i)
            if (!scalar_traits<K>::is_zero(a.coeff(i), 0)) cur[std::size_t(i)].emplace(zero_e, a.coeff(i));
        for (int s = 1; s <= n; ++s) {
            int d = n - s + 1;  // degree of p^(s) in u
            // relation: z_s^d + sum_{m<d} c_m z_s^m = 0
            std::vector<std::pair<std::vector<int>, K>> rel;
            for (int m = 0; m < d; ++m)
                for (const auto& [e, c] : cur[std::size_t(m)]) {
                    std::vector<int> t = e;
                    t[std::size_t(s - 1)] += m;
                    rel.emplace_back(std::move(t), K(-c));
                }
            // leading coefficient must be exactly one
            if (cur[std::size_t(d)].size() != 1 ||
                !scalar_traits<K>::near(cur[std::size_t(d)].begin()->second, scalar_traits<K>::one(), 0))
                throw CheckError("division chain lost monicity");
            rhs.push_back(std::move(rel));
            // next layer: q_j = sum_{i=j+1}^{d} c_i z_s^{i-j-1}
            std::vector<Mono<K>> nxt;
            nxt.resize(std::size_t(d));
            for (int j = 0; j + 1 <= d; ++j)
                for (int i = j + 1; i <= d; ++i)
                    for (const auto& [e, c] : cur[std::size_t(i)]) {
                        std::vector<int> t = e;
                        t[std::size_t(s - 1)] += i - j - 1;
                        detail::mono_add(nxt[std::size_t(j)], t, c);
                    }
            cur = std::move(nxt);
        }
    }

    bool staircase(const std::vector<int>& e) const {
        for (int s = 1; s <= n; ++s)
            if (e[std::size_t(s - 1)] > n - s) return false;
        return true;
    }

    long index_of(const std::vector<int>& e) const {
        std::vector<long> d(e.begin(), e.end());
        return radix.index(d);
    }
    std::vector<int> expo_of(long idx) const {
        std::vector<long> d = radix.digits(idx);
        return std::vector<int>(d.begin(), d.end());
    }

    void reduce(Mono<K>& m) const {
        for (int s = n; s >= 1; --s) {
            int cap = n - s;
            for (;;) {
                auto hit = m.end();
                for (auto it = m.begin(); it != m.end(); ++it)
                    if (it->first[std::size_t(s - 1)] > cap) {
                        hit = it;
                        break;
                    }
                if (hit == m.end()) break;
                std::vector<int> base = hit->first;
                K coef = hit->second;
                m.erase(hit);
                base[std::size_t(s - 1)] -= cap + 1;
                for (const auto& [rm, rc] : rhs[std::size_t(s - 1)]) {
                    std::vector<int> t = base;
                    for (int r = 0; r < n; ++r) t[std::size_t(r)] += rm[std::size_t(r)];
                    detail::mono_add(m, t, K(coef * rc));
                }
            }
        }
    }

    std::vector<K> coords(Mono<K> m) const {
        reduce(m);
        std::vector<K> v(std::size_t(dim), scalar_traits<K>::zero());
        for (const auto& [e, c] : m) {
            if (!staircase(e)) throw CheckError("reduction failed to reach the staircase basis");
            v[std::size_t(index_of(e))] = c;
        }
        return v;
    }

    // multiplication by z_s, 1-based s
    Matrix<K> multiplication(int s) const {
        Matrix<K> z{int(dim), int(dim)};
        for (long col = 0; col < dim; ++col) {
            std::vector<int> e = expo_of(col);
            e[std::size_t(s - 1)] += 1;
            Mono<K> m;
            m.emplace(std::move(e), scalar_traits<K>::one());
            std::vector<K> v = coords(std::move(m));
            for (long r = 0; r < dim; ++r) z(int(r), int(col)) = v[std::size_t(r)];
        }
        return z;
    }

    // variable permutation: new exponent at position sigma(r) is the old one at r
    Matrix<K> perm_action(const std::vector<int>& sigma) const {
        Matrix<K> p{int(dim), int(dim)};
        for (long col = 0; col < dim; ++col) {
            std::vector<int> e = expo_of(col), e2(std::size_t(n), 0);
            for (int r = 0; r < n; ++r) e2[std::size_t(sigma[std::size_t(r)])] = e[std::size_t(r)];
            Mono<K> m;
            m.emplace(std::move(e2), scalar_traits<K>::one());
            std::vector<K> v = coords(std::move(m));
            for (long r = 0; r < dim; ++r) p(int(r), int(col)) = v[std::size_t(r)];
        }
        return p;
    }

    // R_s(u) = (a(u) - a(Z_s)) / (u - Z_s) as a polynomial matrix; together
    // with a(Z_s) = 0 this is the cleared resolvent: (u - Z_s) R_s(u) = a(u)
    Matrix<Polynomial<K>> cleared_resolvent(const Matrix<K>& zs) const {
        int d = int(dim);
        Matrix<Polynomial<K>> r(d, d);
        Matrix<K> zpow = Matrix<K>::identity(d, scalar_traits<K>::one());
        for (int j = 0; j < n; ++j) {
            std::vector<K> dj;  // coefficient of u^t is a_{j+1+t}
            for (int i = j + 1; i <= n; ++i) dj.push_back(a.coeff(i));
            Polynomial<K> djp{dj};
            r += djp * to_poly_matrix(zpow);
            zpow = zpow * zs;
        }
        return r;
    }
};

// slot permutation on the tensor power: letter at slot sigma(r) comes from r
inline long permute_tensor_index(const detail::MixedRadix& ix, const std::vector<int>& sigma,
                                 long idx) {
    std::vector<long> l = ix.digits(idx), l2(l.size());
    for (std::size_t r = 0; r < l.size(); ++r) l2[std::size_t(sigma[r])] = l[r];
    return ix.index(l2);
}

template <class K>
struct WeylModuleData {
    CoinvariantAlgebra<K> alg;
    std::vector<Matrix<K>> Z;   // multiplication by z_1..z_n
    Subspace<K> inv;            // symmetric vectors inside V^{otimes n} tensor A
    ModuleRep<K> rep;           // the module itself, dimension N^n
};

// The module for divisor sum n_s [b_s]: invariants of V^{otimes n} tensor A
// under the simultaneous S_n action, with e_ij(u) acting through the cleared
// resolvents R_s(u)/a(u).
template <class K>
WeylModuleData<K> build_weyl_tensor(int N, const std::vector<K>& points,
                                    const std::vector<int>& mult, const SizeGuards& guards = {},
                                    double tol = kDefaultTol) {
    if (points.size() != mult.size() || points.empty())
        throw InputError("one multiplicity per point required");
    int n = 0;
    for (int m : mult) {
        if (m < 1) throw InputError("multiplicities must be positive");
        n += m;
    }
    if (n > guards.max_weyl_n) throw InputError("divisor degree guard exceeded");
    long vn = ipow_checked(N, n, guards.max_coinvariant_dim);
    long dimA = factorial(n);
    if (vn > guards.max_coinvariant_dim / dimA) throw InputError("coinvariant dimension guard exceeded");
    long D = vn * dimA;

    WeylModuleData<K> w{CoinvariantAlgebra<K>(n, points_polynomial(points, mult)), {}, {}, {}};
    for (int s = 1; s <= n; ++s) w.Z.push_back(w.alg.multiplication(s));

    std::vector<std::vector<int>> perms = detail::all_permutations(n);
    std::vector<Matrix<K>> pacts;
    pacts.reserve(perms.size());
    for (const auto& sigma : perms) pacts.push_back(w.alg.perm_action(sigma));

    detail::MixedRadix vix(std::vector<long>(std::size_t(n), N));
    auto weight_of = [&](long vidx) {
        std::vector<long> wt(std::size_t(N), 0);
        for (long l : vix.digits(vidx)) ++wt[std::size_t(l)];
        return wt;
    };

    // group tensor indices by weight
    std::map<std::vector<long>, std::vector<long>> blocks;
    for (long v = 0; v < vn; ++v) blocks[weight_of(v)].push_back(v);

    K inv_fact = scalar_traits<K>::one() / scalar_traits<K>::from_int(dimA);

    // averaging over the group, one weight block at a time
    std::vector<std::vector<K>> columns;  // invariant vectors, full length D
    std::vector<std::vector<long>> col_weights;
    for (const auto& [wt, vlist] : blocks) {
        std::size_t target = vlist.size();
        // local echelon over rows (lead = smallest index)
        std::map<long, std::map<long, K>> echelon;
        std::vector<std::map<long, K>> kept;
        for (long v : vlist) {
            for (long acol = 0; acol < dimA && kept.size() < target; ++acol) {
                std::map<long, K> cand;
                for (std::size_t p = 0; p < perms.size(); ++p) {
                    long v2 = permute_tensor_index(vix, perms[p], v);
                    const Matrix<K>& pa = pacts[p];
                    for (long t = 0; t < dimA; ++t) {
                        const K& c = pa(int(t), int(acol));
                        if (scalar_traits<K>::is_zero(c, 0)) continue;
                        long row = v2 * dimA + t;
                        auto it = cand.find(row);
                        if (it == cand.end())
                            cand.emplace(row, K(c * inv_fact));
                        else {
                            it->second += c * inv_fact;
                            if (scalar_traits<K>::is_zero(it->second, 0)) cand.erase(it);
                        }
                    }
                }
                // reduce against the block echelon
                for (;;) {
                    if (cand.empty()) break;
                    long lead = cand.begin()->first;
                    auto it = echelon.find(lead);
                    if (it == echelon.end()) {
                        K inv = scalar_traits<K>::one() / cand.begin()->second;
                        for (auto& [i, c] : cand) c = inv * c;
                        echelon.emplace(lead, cand);
                        kept.push_back(std::move(cand));
                        break;
                    }
                    K f = cand.begin()->second;
                    for (const auto& [i, c] : it->second) {
                        auto jt = cand.find(i);
                        if (jt == cand.end())
                            cand.emplace(i, K(-(f * c)));
                        else {
                            jt->second -= f * c;
                            if (scalar_traits<K>::is_zero(jt->second, 0)) cand.erase(jt);
                        }
                    }
                }
            }
            if (kept.size() >= target) break;
        }
        if (kept.size() != target)
            throw CheckError("symmetric subspace has unexpected dimension in a weight block");
        // back-substitute bottom-up so each lead row carries a lone 1; blocks
        // have disjoint row support, so this stays local to the block
        std::sort(kept.begin(), kept.end(),
                  [](const std::map<long, K>& a, const std::map<long, K>& b) {
                      return a.begin()->first < b.begin()->first;
                  });
        for (std::size_t i = kept.size(); i-- > 0;)
            for (std::size_t j = i + 1; j < kept.size(); ++j) {
                long lj = kept[j].begin()->first;
                auto it = kept[i].find(lj);
                if (it == kept[i].end()) continue;
                K f = it->second;
                for (const auto& [r, c] : kept[j]) {
                    auto jt = kept[i].find(r);
                    if (jt == kept[i].end())
                        kept[i].emplace(r, K(-(f * c)));
                    else {
                        jt->second -= f * c;
                        if (scalar_traits<K>::is_zero(jt->second, 0)) kept[i].erase(jt);
                    }
                }
            }
        for (auto& v : kept) {
            std::vector<K> full(std::size_t(D), scalar_traits<K>::zero());
            for (const auto& [i, c] : v) full[std::size_t(i)] = c;
            columns.push_back(std::move(full));
            col_weights.push_back(wt);
        }
    }

    w.inv.E = Matrix<K>(int(D), int(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (long r = 0; r < D; ++r) w.inv.E(int(r), int(c)) = columns[c][std::size_t(r)];
        for (long r = 0; r < D; ++r)
            if (!scalar_traits<K>::is_zero(columns[c][std::size_t(r)], 0)) {
                w.inv.pivots.push_back(int(r));
                break;
            }
    }

    // full-space generator matrices, then compression
    ModuleRep<K>& rep = w.rep;
    rep.N = N;
    rep.dim = int(columns.size());
    rep.amod = w.alg.a;
    rep.has_series = true;

    std::vector<Matrix<Polynomial<K>>> res;
    for (int s = 0; s < n; ++s) res.push_back(w.alg.cleared_resolvent(w.Z[std::size_t(s)]));

    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            // slot action on the tensor factor, id on A
            Matrix<K> cst{int(D), int(D)};
            Matrix<Polynomial<K>> ser{int(D), int(D)};
            for (int s = 0; s < n; ++s) {
                // sparse slot generator: tensor basis maps to tensor basis
                for (long v = 0; v < vn; ++v) {
                    std::vector<long> letters = vix.digits(v);
                    if (letters[std::size_t(s)] != j - 1) continue;
                    letters[std::size_t(s)] = i - 1;
                    long v2 = vix.index(letters);
                    for (long t = 0; t < dimA; ++t)
                        cst(int(v2 * dimA + t), int(v * dimA + t)) += scalar_traits<K>::one();
                    const Matrix<Polynomial<K>>& r = res[std::size_t(s)];
                    for (long t2 = 0; t2 < dimA; ++t2)
                        for (long t = 0; t < dimA; ++t)
                            if (!r(int(t2), int(t)).is_zero())
                                ser(int(v2 * dimA + t2), int(v * dimA + t)) += r(int(t2), int(t));
                }
            }
            rep.e.push_back(compress_matrix(cst, w.inv, tol));
            rep.eu.push_back(MatSeries<K>(compress_poly_matrix(ser, w.inv, tol), w.alg.a));
        }

    rep.weights = std::move(col_weights);
    rep.labels.assign(std::size_t(rep.dim), "");
    for (int c = 0; c < rep.dim; ++c) rep.labels[std::size_t(c)] = "s" + std::to_string(c);
    return w;
}

}  // namespace gaudin
