#pragma once

// Wronskian determinants of polynomial tuples. The permutation expansion is
// fine here: tuples are as long as the matrix size cap, and entries commute.

#include "gaudin/poly.hpp"

namespace gaudin {

template <class K>
Polynomial<K> wronskian(const std::vector<Polynomial<K>>& f) {
    int n = int(f.size());
    if (n == 0) throw InputError("Wronskian of an empty tuple");
    if (n > 6) throw InputError("Wronskian limited to 6 functions");
    // derivative table: rows are functions, columns derivative orders
    std::vector<std::vector<Polynomial<K>>> d;
    d.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        d[std::size_t(i)].push_back(f[std::size_t(i)]);
        for (int j = 1; j < n; ++j) d[std::size_t(i)].push_back(d[std::size_t(i)].back().derivative());
    }
    std::vector<int> perm(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    Polynomial<K> acc;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inv;
        Polynomial<K> term = Polynomial<K>::one();
        for (int i = 0; i < n; ++i) term *= d[std::size_t(i)][std::size_t(perm[std::size_t(i)])];
        if (inv % 2 == 1) term = -term;
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// monic normalization plus the constant factor split off, failing loudly if
// the leading coefficient is not invertible in K
template <class K>
std::pair<Polynomial<K>, K> wronskian_monic(const std::vector<Polynomial<K>>& f) {
    Polynomial<K> w = wronskian(f);
    if (w.is_zero()) throw CheckError("Wronskian vanished: functions are dependent");
    K lead = w.leading();
    K inv = scalar_traits<K>::one() / lead;
    return {inv * w, lead};
}

}  // namespace gaudin
