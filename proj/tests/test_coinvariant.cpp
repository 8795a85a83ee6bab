#include <doctest.h>

#include "gaudin/bethe.hpp"
#include "gaudin/coinvariant.hpp"

using namespace gaudin;

namespace {

Polynomial<Rat> P(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rat>(std::move(v));
}

Polynomial<Rat> trace_of(const Matrix<Polynomial<Rat>>& m) {
    Polynomial<Rat> t;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST_CASE("the symmetric quotient ring has dimension n! and scalar symmetric functions") {
    // a = (u-1)(u-2) = u^2 - 3u + 2: z_1 + z_2 and z_1 z_2 act as scalars
    CoinvariantAlgebra<Rat> alg(2, P({2, -3, 1}));
    CHECK(alg.dim == 2);
    auto z1 = alg.multiplication(1);
    auto z2 = alg.multiplication(2);
    CHECK(z1 * z2 == z2 * z1);
    CHECK(z1 + z2 == Rat(3) * Matrix<Rat>::identity(2, Rat(1)));
    CHECK(z1 * z2 == Rat(2) * Matrix<Rat>::identity(2, Rat(1)));
    // each z_s is a root of a: a(z_s) = 0 in the quotient
    auto eval_a = [&](const Matrix<Rat>& z) {
        return z * z - Rat(3) * z + Rat(2) * Matrix<Rat>::identity(2, Rat(1));
    };
    CHECK(eval_a(z1).is_zero());
    CHECK(eval_a(z2).is_zero());
}

TEST_CASE("transpositions conjugate one variable into another") {
    CoinvariantAlgebra<Rat> alg(2, P({-1, 0, 1}));
    auto z1 = alg.multiplication(1), z2 = alg.multiplication(2);
    auto sw = alg.perm_action({1, 0});
    CHECK(sw * sw == Matrix<Rat>::identity(2, Rat(1)));
    CHECK(sw * z1 == z2 * sw);
    CHECK(sw * z2 == z1 * sw);
}

TEST_CASE("three variables with a triple root still close under rewriting") {
    CoinvariantAlgebra<Rat> alg(3, P({0, 0, 0, 1}));  // a = u^3
    CHECK(alg.dim == 6);
    auto z1 = alg.multiplication(1);
    auto z2 = alg.multiplication(2);
    auto z3 = alg.multiplication(3);
    CHECK((z1 + z2 + z3).is_zero());  // e_1 = 0
    CHECK((z1 * z2 + z1 * z3 + z2 * z3).is_zero());
    CHECK((z1 * z2 * z3).is_zero());
    CHECK(z1 * z2 == z2 * z1);
    // nilpotency order: z_1^3 = 0 but z_1^2 != 0
    CHECK((z1 * z1 * z1).is_zero());
    CHECK(!(z1 * z1).is_zero());
}

TEST_CASE("divisor-power module over one point has tensor power dimension") {
    auto w = build_weyl_tensor<Rat>(2, {Rat(0)}, {3});
    CHECK(w.rep.dim == 8);
    CHECK(w.rep.N == 2);
    CHECK(w.rep.has_series);
    CHECK(w.rep.amod == P({0, 0, 0, 1}));
    CHECK(singular_space(w.rep, Partition({2, 1})).dim() == 2);
    CHECK(singular_space(w.rep, Partition({3})).dim() == 1);
    CHECK(singular_space(w.rep, Partition({1, 1})).dim() == 0);  // wrong weight size cannot appear
    CHECK(trace_series_identity(w.rep, {Rat(0)}, {3}));
}

TEST_CASE("two points with multiplicities keep the bracket and the trace divisor") {
    auto w = build_weyl_tensor<Rat>(2, {Rat(0), Rat(1)}, {2, 1});
    CHECK(w.rep.dim == 8);
    CHECK(w.rep.amod == P({0, 0, -1, 1}));  // u^2 (u-1)
    CHECK(trace_series_identity(w.rep, {Rat(0), Rat(1)}, {2, 1}));
    // bracket spot check: [e_12, e_21] = e_11 - e_22
    auto lhs = w.rep.e_const(1, 2) * w.rep.e_const(2, 1) - w.rep.e_const(2, 1) * w.rep.e_const(1, 2);
    CHECK(lhs == w.rep.e_const(1, 1) - w.rep.e_const(2, 2));
}

TEST_CASE("reduced divisor agrees with the plain tensor product model") {
    // all multiplicities one: the symmetrized model is isomorphic to the
    // tensor product, so restricted numerators have identical traces
    std::vector<Rat> pts{Rat(0), Rat(1)};
    auto w = build_weyl_tensor<Rat>(2, pts, {1, 1});
    auto t = build_tensor_evaluation<Rat>(2, {Partition({1}), Partition({1})}, pts);
    CHECK(w.rep.dim == t.dim);
    auto fam_w = universal_diffop(w.rep);
    auto fam_t = universal_diffop(t);
    CHECK(fam_w.den == fam_t.den);
    for (const Partition& lam : {Partition({1, 1}), Partition({2})}) {
        auto rw = restrict_family(fam_w, singular_space(w.rep, lam));
        auto rt = restrict_family(fam_t, singular_space(t, lam));
        REQUIRE(rw.dim == rt.dim);
        for (int i = 0; i < 2; ++i) CHECK(trace_of(rw.A[std::size_t(i)]) == trace_of(rt.A[std::size_t(i)]));
    }
}

TEST_CASE("identity checks hold on the non-reduced module") {
    auto w = build_weyl_tensor<Rat>(2, {Rat(0)}, {2});
    auto fam = universal_diffop(w.rep);
    CHECK(first_coefficient_identity(w.rep, fam));
    CHECK(central_series_identity(w.rep, fam));
    auto z = central_Z(w.rep);
    CHECK(central_eval_identity(z, singular_space(w.rep, Partition({2})), Partition({2}), 2));
    CHECK(central_eval_identity(z, singular_space(w.rep, Partition({1, 1})), Partition({1, 1}), 2));
}

TEST_CASE("input guards on the symmetrized model") {
    CHECK_THROWS_AS(build_weyl_tensor<Rat>(2, {Rat(0)}, {0}), InputError);
    CHECK_THROWS_AS(build_weyl_tensor<Rat>(2, {Rat(0), Rat(1)}, {1}), InputError);
    CHECK_THROWS_AS(build_weyl_tensor<Rat>(2, {Rat(0)}, {6}), InputError);  // past the divisor cap
}
