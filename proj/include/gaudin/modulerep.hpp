#pragma once

// Finite-dimensional gl_N machinery: the vector representation, irreducibles
// cut out of tensor powers by lowering from a highest weight vector, tensor
// products of evaluation modules with their generating series, singular
// (highest-weight) subspaces, and the central determinant Z(x).

#include <array>
#include <map>
#include <set>

#include "gaudin/diffop.hpp"
#include "gaudin/linalg.hpp"
#include "gaudin/partition.hpp"

namespace gaudin {

template <class K>
Matrix<Polynomial<K>> to_poly_matrix(const Matrix<K>& m) {
    Matrix<Polynomial<K>> p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!scalar_traits<K>::is_zero(m(i, j), 0)) p(i, j) = Polynomial<K>(m(i, j));
    return p;
}

// column-echelonized subspace: E restricted to the pivot rows is the identity
template <class K>
struct Subspace {
    Matrix<K> E;
    std::vector<int> pivots;
    int dim() const { return E.cols(); }
};

// Restrict X to an invariant subspace: Y with X E = E Y. The invariance
// residual must vanish (exactly, or within tol for floats).
template <class K>
Matrix<K> compress_matrix(const Matrix<K>& x, const Subspace<K>& s, double tol) {
    Matrix<K> xe = x * s.E;
    Matrix<K> y = xe.rows_at(s.pivots);
    Matrix<K> resid = s.E * y - xe;
    if constexpr (scalar_traits<K>::is_exact) {
        if (!resid.is_zero()) throw CheckError("subspace is not invariant under the action");
    } else {
        double scale = 1.0;
        for (int i = 0; i < xe.rows(); ++i)
            for (int j = 0; j < xe.cols(); ++j)
                scale = std::max(scale, scalar_traits<K>::abs_val(xe(i, j)));
        for (int i = 0; i < resid.rows(); ++i)
            for (int j = 0; j < resid.cols(); ++j)
                if (scalar_traits<K>::abs_val(resid(i, j)) > tol * scale)
                    throw CheckError("invariance residual above tolerance");
    }
    return y;
}

template <class K>
Matrix<Polynomial<K>> compress_poly_matrix(const Matrix<Polynomial<K>>& x, const Subspace<K>& s,
                                           double tol) {
    Matrix<Polynomial<K>> ep = to_poly_matrix(s.E);
    Matrix<Polynomial<K>> xe = x * ep;
    Matrix<Polynomial<K>> y = xe.rows_at(s.pivots);
    Matrix<Polynomial<K>> resid = ep * y - xe;
    double scale = 1.0;
    if constexpr (!scalar_traits<K>::is_exact)
        for (int i = 0; i < xe.rows(); ++i)
            for (int j = 0; j < xe.cols(); ++j) scale = std::max(scale, xe(i, j).max_abs());
    for (int i = 0; i < resid.rows(); ++i)
        for (int j = 0; j < resid.cols(); ++j) {
            if constexpr (scalar_traits<K>::is_exact) {
                if (!resid(i, j).is_zero()) throw CheckError("subspace is not invariant under the action");
            } else {
                if (resid(i, j).max_abs() > tol * scale)
                    throw CheckError("invariance residual above tolerance");
            }
        }
    return y;
}

template <class K>
MatSeries<K> compress_series(const MatSeries<K>& m, const Subspace<K>& s, double tol) {
    return MatSeries<K>(compress_poly_matrix(m.num, s, tol), m.den);
}

template <class K>
struct ModuleRep {
    int N = 0;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> weights;
    std::vector<Matrix<K>> e;        // constant generators, index (i-1)*N+(j-1)
    std::vector<MatSeries<K>> eu;    // generating series, same indexing
    Polynomial<K> amod;              // prod_s (u - b_s)^{n_s}
    bool has_series = false;

    const Matrix<K>& e_const(int i, int j) const { return e[std::size_t(i - 1) * N + (j - 1)]; }
    const MatSeries<K>& e_series(int i, int j) const {
        if (!has_series) throw CheckError("module carries no generating series");
        return eu[std::size_t(i - 1) * N + (j - 1)];
    }
};

namespace detail {

// mixed-radix indexing of tensor product bases, leftmost factor most significant
struct MixedRadix {
    std::vector<long> dims;
    long total = 1;
    explicit MixedRadix(std::vector<long> d) : dims(std::move(d)) {
        for (long x : dims) total *= x;
    }
    long index(const std::vector<long>& digits) const {
        long idx = 0;
        for (std::size_t s = 0; s < dims.size(); ++s) idx = idx * dims[s] + digits[s];
        return idx;
    }
    std::vector<long> digits(long idx) const {
        std::vector<long> d(dims.size());
        for (std::size_t s = dims.size(); s-- > 0;) {
            d[s] = idx % dims[s];
            idx /= dims[s];
        }
        return d;
    }
};

template <class K>
using SparseVec = std::map<long, K>;

template <class K>
void sparse_add(SparseVec<K>& v, long idx, const K& c) {
    auto it = v.find(idx);
    if (it == v.end()) {
        if (!scalar_traits<K>::is_zero(c, 0)) v.emplace(idx, c);
    } else {
        it->second += c;
        if (scalar_traits<K>::is_zero(it->second, 0)) v.erase(it);
    }
}

// echelon store keyed by leading index, per weight class
template <class K>
struct EchelonStore {
    // reduce v against the store; returns true and inserts if independent
    bool insert(SparseVec<K> v) {
        for (;;) {
            if (v.empty()) return false;
            long lead = v.begin()->first;
            auto it = rows.find(lead);
            if (it == rows.end()) {
                K inv = scalar_traits<K>::one() / v.begin()->second;
                for (auto& [i, c] : v) c = inv * c;
                rows.emplace(lead, std::move(v));
                return true;
            }
            K f = v.begin()->second;
            for (const auto& [i, c] : it->second) sparse_add(v, i, K(-(f * c)));
        }
    }
    std::map<long, SparseVec<K>> rows;
};

}  // namespace detail

// e_ij acting on one tensor slot of V^{\otimes n}: basis tensors map to basis
// tensors, so the action of a generator is applied index by index
template <class K>
void tensor_generator_apply(int N, int n, int i, int j, int slot,
                            const detail::SparseVec<K>& v, detail::SparseVec<K>& out) {
    std::vector<long> dims(std::size_t(n), N);
    detail::MixedRadix ix(dims);
    for (const auto& [idx, c] : v) {
        std::vector<long> letters = ix.digits(idx);
        if (letters[std::size_t(slot)] == j - 1) {
            letters[std::size_t(slot)] = i - 1;
            detail::sparse_add(out, ix.index(letters), c);
        }
    }
}

template <class K>
struct IrrepModule {
    int N = 0;
    int dim = 0;
    std::vector<Matrix<K>> e;  // index (i-1)*N+(j-1)
    std::vector<std::vector<long>> weights;
    std::vector<std::string> labels;
};

inline long weyl_dimension(int N, const Partition& lambda) {
    Rat d(1);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            d *= Rat(lambda.part(i) - lambda.part(j) + j - i, j - i);
    return d.convert_to<long>();
}

// The irreducible with highest weight lambda, realized inside V^{\otimes
// |lambda|}: start from the column-antisymmetrized highest weight tensor and
// close up under the lowering operators.
template <class K>
IrrepModule<K> build_irrep(int N, const Partition& lambda_in, const SizeGuards& guards = {}) {
    Partition lambda = lambda_in.padded(N);
    int n0 = int(lambda.size());
    if (n0 == 0) throw InputError("the trivial weight labels no evaluation module here");
    if (ipow_checked(N, n0, guards.max_tensor_dim) > guards.max_tensor_dim)
        throw InputError("tensor power dimension guard exceeded");

    std::vector<long> dims(std::size_t(n0), N);
    detail::MixedRadix ix(dims);

    // highest weight vector: product over diagram columns of alternating tensors
    detail::SparseVec<K> hw;
    {
        std::vector<int> heights;
        for (long c = 1; c <= lambda.part(1); ++c) {
            int h = 0;
            for (int i = 1; i <= N; ++i)
                if (lambda.part(i) >= c) ++h;
            heights.push_back(h);
        }
        // letters for one column: permutations of (0..h-1) with sign
        detail::SparseVec<K> acc;
        acc.emplace(0, scalar_traits<K>::one());
        long offset = 0;  // how many slots already consumed
        for (int h : heights) {
            detail::SparseVec<K> next;
            std::vector<int> perm(std::size_t(h), 0);
            for (int i = 0; i < h; ++i) perm[std::size_t(i)] = i;
            do {
                int inv = 0;
                for (int a = 0; a < h; ++a)
                    for (int b = a + 1; b < h; ++b)
                        if (perm[std::size_t(a)] > perm[std::size_t(b)]) ++inv;
                long col_idx = 0;
                for (int a = 0; a < h; ++a) col_idx = col_idx * N + perm[std::size_t(a)];
                K sgn = scalar_traits<K>::from_int(inv % 2 ? -1 : 1);
                for (const auto& [idx, c] : acc) {
                    // idx covers slots [0, offset); shift in this column
                    long full = idx;
                    for (int a = 0; a < h; ++a) full = full * N;
                    full += col_idx;
                    detail::sparse_add(next, full, K(c * sgn));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc = std::move(next);
            offset += h;
        }
        // acc indexes slots [0, n0) already since offset == n0 at the end
        hw = std::move(acc);
    }

    // close under lowering operators, tracking weights
    auto weight_of = [&](long idx) {
        std::vector<long> w(std::size_t(N), 0);
        for (long l : ix.digits(idx)) ++w[std::size_t(l)];
        return w;
    };
    std::map<std::vector<long>, detail::EchelonStore<K>> blocks;
    std::vector<std::pair<std::vector<long>, detail::SparseVec<K>>> queue;
    {
        std::vector<long> w0 = weight_of(hw.begin()->first);
        detail::EchelonStore<K>& st = blocks[w0];
        detail::SparseVec<K> copy = hw;
        st.insert(std::move(copy));
        queue.emplace_back(w0, st.rows.begin()->second);
    }
    while (!queue.empty()) {
        auto [w, v] = std::move(queue.back());
        queue.pop_back();
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                if (a <= b) continue;  // lowering only: e_ab with a > b
                detail::SparseVec<K> out;
                for (int slot = 0; slot < n0; ++slot) tensor_generator_apply(N, n0, a, b, slot, v, out);
                if (out.empty()) continue;
                std::vector<long> w2 = weight_of(out.begin()->first);
                detail::SparseVec<K> normalized = out;
                if (blocks[w2].insert(std::move(out))) {
                    // re-normalize the stored copy for the queue
                    K inv = scalar_traits<K>::one() / normalized.begin()->second;
                    for (auto& [i, c] : normalized) c = inv * c;
                    queue.emplace_back(w2, std::move(normalized));
                }
            }
    }

    // assemble a deterministic basis: weights in map order, leads ascending
    std::vector<detail::SparseVec<K>> basis;
    std::vector<std::vector<long>> weights;
    for (auto& [w, st] : blocks)
        for (auto& [lead, v] : st.rows) {
            basis.push_back(v);
            weights.push_back(w);
        }
    int d = int(basis.size());
    long expect = weyl_dimension(N, lambda);
    if (d != expect)
        throw CheckError("irreducible module dimension mismatch: got " + std::to_string(d) +
                         ", Weyl dimension " + std::to_string(expect));

    // coordinates of a sparse vector in the echelon basis
    std::map<long, int> lead_to_col;
    for (int c = 0; c < d; ++c) lead_to_col[basis[std::size_t(c)].begin()->first] = c;
    auto coordinates = [&](detail::SparseVec<K> v) {
        std::vector<K> coords(std::size_t(d), scalar_traits<K>::zero());
        while (!v.empty()) {
            long lead = v.begin()->first;
            auto it = lead_to_col.find(lead);
            if (it == lead_to_col.end()) throw CheckError("vector left the module during restriction");
            K f = v.begin()->second;
            coords[std::size_t(it->second)] = f;
            for (const auto& [i, c] : basis[std::size_t(it->second)]) detail::sparse_add(v, i, K(-(f * c)));
        }
        return coords;
    };

    IrrepModule<K> m;
    m.N = N;
    m.dim = d;
    m.weights = std::move(weights);
    m.e.assign(std::size_t(N) * N, Matrix<K>(d, d));
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            Matrix<K>& mat = m.e[std::size_t(a - 1) * N + (b - 1)];
            for (int col = 0; col < d; ++col) {
                detail::SparseVec<K> out;
                for (int slot = 0; slot < n0; ++slot)
                    tensor_generator_apply(N, n0, a, b, slot, basis[std::size_t(col)], out);
                if (out.empty()) continue;
                std::vector<K> coords = coordinates(std::move(out));
                for (int r = 0; r < d; ++r) mat(r, col) = coords[std::size_t(r)];
            }
        }
    m.labels.reserve(std::size_t(d));
    for (int c = 0; c < d; ++c) m.labels.push_back("w" + std::to_string(c));
    return m;
}

template <class K>
Polynomial<K> points_polynomial(const std::vector<K>& points, const std::vector<int>& mult) {
    Polynomial<K> p = Polynomial<K>::one();
    for (std::size_t s = 0; s < points.size(); ++s) {
        Polynomial<K> lin(std::vector<K>{K(-points[s]), scalar_traits<K>::one()});
        p = p * lin.pow(mult[s]);
    }
    return p;
}

// Tensor product of evaluation modules L_{lambda^(s)}(b_s): constant
// generators sum over slots, the series picks up 1/(u-b_s) per slot.
template <class K>
ModuleRep<K> build_tensor_evaluation(int N, const std::vector<Partition>& Lambda,
                                     const std::vector<K>& points, const SizeGuards& guards = {}) {
    if (Lambda.empty() || Lambda.size() != points.size())
        throw InputError("one partition per evaluation point required");
    std::vector<IrrepModule<K>> factors;
    factors.reserve(Lambda.size());
    std::vector<long> dims;
    long total = 1;
    for (const Partition& p : Lambda) {
        factors.push_back(build_irrep<K>(N, p, guards));
        dims.push_back(factors.back().dim);
        total *= dims.back();
        if (total > guards.max_tensor_dim) throw InputError("tensor dimension guard exceeded");
    }
    detail::MixedRadix ix(dims);
    int D = int(total);
    int k = int(Lambda.size());

    ModuleRep<K> m;
    m.N = N;
    m.dim = D;
    std::vector<int> mult;
    for (const Partition& p : Lambda) mult.push_back(int(p.size()));
    m.amod = points_polynomial(points, mult);

    m.weights.assign(std::size_t(D), {});
    m.labels.assign(std::size_t(D), "");
    for (int idx = 0; idx < D; ++idx) {
        std::vector<long> digits = ix.digits(idx);
        std::vector<long> w(std::size_t(N), 0);
        std::string lab;
        for (int s = 0; s < k; ++s) {
            const auto& fw = factors[std::size_t(s)].weights[std::size_t(digits[std::size_t(s)])];
            for (int i = 0; i < N; ++i) w[std::size_t(i)] += fw[std::size_t(i)];
            lab += (s ? "|" : "") + factors[std::size_t(s)].labels[std::size_t(digits[std::size_t(s)])];
        }
        m.weights[std::size_t(idx)] = std::move(w);
        m.labels[std::size_t(idx)] = std::move(lab);
    }

    // one-slot action lifted to the product
    auto lift = [&](int s, const Matrix<K>& f) {
        Matrix<K> big(D, D);
        for (int col = 0; col < D; ++col) {
            std::vector<long> digits = ix.digits(col);
            long old = digits[std::size_t(s)];
            for (int r = 0; r < factors[std::size_t(s)].dim; ++r) {
                if (scalar_traits<K>::is_zero(f(r, int(old)), 0)) continue;
                digits[std::size_t(s)] = r;
                big(int(ix.index(digits)), col) = f(r, int(old));
            }
            digits[std::size_t(s)] = old;
        }
        return big;
    };

    Polynomial<K> simple_den = points_polynomial(points, std::vector<int>(std::size_t(k), 1));
    m.e.assign(std::size_t(N) * N, Matrix<K>(D, D));
    m.eu.assign(std::size_t(N) * N, MatSeries<K>());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Matrix<K> cst(D, D);
            Matrix<Polynomial<K>> ser(D, D);
            for (int s = 0; s < k; ++s) {
                Matrix<K> big = lift(s, factors[std::size_t(s)].e[std::size_t(i - 1) * N + (j - 1)]);
                cst += big;
                // weight the slot by prod_{r != s} (u - b_r)
                std::vector<K> others;
                for (int r = 0; r < k; ++r)
                    if (r != s) others.push_back(points[std::size_t(r)]);
                Polynomial<K> w =
                    points_polynomial(others, std::vector<int>(others.size(), 1));
                ser += Polynomial<K>(w) * to_poly_matrix(big);
            }
            m.e[std::size_t(i - 1) * N + (j - 1)] = std::move(cst);
            m.eu[std::size_t(i - 1) * N + (j - 1)] = MatSeries<K>(std::move(ser), simple_den);
        }
    m.has_series = true;
    return m;
}

// Singular vectors of a given weight: kernel of the stacked simple raising
// operators on the weight space, embedded back into module coordinates.
template <class K>
Subspace<K> singular_space(const ModuleRep<K>& m, const Partition& lambda_in, double tol = kDefaultTol) {
    Partition lambda = lambda_in.padded(m.N);
    std::vector<long> target(lambda.parts);
    std::vector<int> widx;
    for (int i = 0; i < m.dim; ++i)
        if (m.weights[std::size_t(i)] == target) widx.push_back(i);
    int wd = int(widx.size());
    Subspace<K> out;
    if (wd == 0) {
        out.E = Matrix<K>(m.dim, 0);
        return out;
    }
    std::vector<Matrix<K>> stack;
    for (int i = 1; i + 1 <= m.N; ++i) {
        Matrix<K> raised = m.e_const(i, i + 1).columns(widx);  // dim x wd
        stack.push_back(raised);
    }
    Matrix<K> sys = stack.empty() ? Matrix<K>(0, wd) : Matrix<K>::vstack(stack);
    std::vector<int> unit_rows;
    Matrix<K> ker = kernel_basis(sys, tol, &unit_rows);
    out.E = Matrix<K>(m.dim, ker.cols());
    for (int r = 0; r < wd; ++r)
        for (int c = 0; c < ker.cols(); ++c) out.E(widx[std::size_t(r)], c) = ker(r, c);
    out.pivots.reserve(unit_rows.size());
    for (int r : unit_rows) out.pivots.push_back(widx[std::size_t(r)]);
    return out;
}

// Z(x) = rdet [ delta_ij (x + i - 1) - e_ji ] as a matrix of polynomials in x
template <class K>
Matrix<Polynomial<K>> central_Z(const ModuleRep<K>& m) {
    using MP = Matrix<Polynomial<K>>;
    int N = m.N;
    std::vector<std::vector<MP>> entries;
    entries.resize(std::size_t(N), std::vector<MP>(std::size_t(N)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            MP cell = to_poly_matrix(Matrix<K>(-m.e_const(j, i)));
            if (i == j) {
                Polynomial<K> xi(std::vector<K>{scalar_traits<K>::from_int(i - 1), scalar_traits<K>::one()});
                for (int r = 0; r < m.dim; ++r) cell(r, r) += xi;
            }
            entries[std::size_t(i - 1)][std::size_t(j - 1)] = std::move(cell);
        }
    return rdet(entries);
}

// Multiplicity of the weight-lambda singular vectors inside V^{tensor n},
// computed without building the full module: the simple raisings act slot by
// slot on the weight block, and we take the kernel of the stacked images.
inline long tensor_power_singular_dimension(int N, int n, const Partition& lambda_in) {
    Partition lambda = lambda_in.padded(N);
    if (lambda.size() != n) throw InputError("weight size must match the tensor power");
    std::vector<long> target(lambda.parts);
    detail::MixedRadix radix{std::vector<long>(std::size_t(n), long(N))};
    std::vector<long> block;
    for (long ix = 0; ix < radix.total; ++ix) {
        std::vector<long> dig = radix.digits(ix);
        std::vector<long> wt(std::size_t(N), 0);
        for (long d : dig) wt[std::size_t(d)] += 1;
        if (wt == target) block.push_back(ix);
    }
    if (block.empty()) return 0;
    int wd = int(block.size());
    std::vector<std::array<long, 3>> trips;  // row key, col, +1 entries
    std::map<long, int> image_rows;
    for (int c = 0; c < wd; ++c) {
        std::vector<long> dig = radix.digits(block[std::size_t(c)]);
        for (int i = 1; i + 1 <= N; ++i)
            for (int s = 0; s < n; ++s)
                if (dig[std::size_t(s)] == i) {  // e_{i,i+1} sends letter i+1 to i
                    std::vector<long> d2 = dig;
                    d2[std::size_t(s)] = i - 1;
                    long key = long(i - 1) * radix.total + radix.index(d2);
                    image_rows.emplace(key, 0);
                    trips.push_back({key, long(c), 1});
                }
    }
    int nr = 0;
    for (auto& kv : image_rows) kv.second = nr++;
    Matrix<Rat> sys{nr, wd};
    for (const auto& t : trips) sys(image_rows[t[0]], int(t[1])) += Rat(1);
    return kernel_basis(sys, 0.0).cols();
}

// dim Hom(L_lambda, tensor of the listed irreducibles), by explicit
// construction at generic points: the answer does not depend on them
inline long dim_multiplicity(int N, const std::vector<Partition>& Lambda, const Partition& lambda,
                             const SizeGuards& guards = SizeGuards{}) {
    std::vector<Rat> pts;
    for (std::size_t s = 0; s < Lambda.size(); ++s) pts.push_back(Rat(long(s)));
    ModuleRep<Rat> m = build_tensor_evaluation(N, Lambda, pts, guards);
    return singular_space(m, lambda).dim();
}

// restriction of a whole module to an invariant subspace (constants only)
template <class K>
ModuleRep<K> compress_module(const ModuleRep<K>& m, const Subspace<K>& s, double tol = kDefaultTol) {
    ModuleRep<K> r;
    r.N = m.N;
    r.dim = s.dim();
    r.amod = m.amod;
    r.has_series = m.has_series;
    r.e.reserve(m.e.size());
    for (const Matrix<K>& x : m.e) r.e.push_back(compress_matrix(x, s, tol));
    if (m.has_series)
        for (const MatSeries<K>& x : m.eu) r.eu.push_back(compress_series(x, s, tol));
    r.labels.assign(std::size_t(r.dim), "");
    for (int c = 0; c < r.dim; ++c) {
        r.labels[std::size_t(c)] = "r" + std::to_string(c);
        r.weights.push_back(m.weights[std::size_t(s.pivots[std::size_t(c)])]);
    }
    return r;
}

}  // namespace gaudin
