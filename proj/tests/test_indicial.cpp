#include <doctest.h>

#include "gaudin/indicial.hpp"

using namespace gaudin;

namespace {

Polynomial<Rat> P(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rat>(std::move(v));
}

RfCoeff<Rat> rf(Polynomial<Rat> num, Polynomial<Rat> den) {
    return RfCoeff<Rat>(RationalFunction<Rat>(std::move(num), std::move(den)));
}

}  // namespace

TEST_CASE("exponents of d^2 at infinity are 0 and 1") {
    ScalarDiffOp<Rat> d2(std::vector<RfCoeff<Rat>>{
        RfCoeff<Rat>(), RfCoeff<Rat>(), RfCoeff<Rat>(RationalFunction<Rat>::one())});
    auto chi = indicial_at_infinity(d2);
    CHECK(chi == P({0, -1, 1}));  // alpha(alpha-1)
    CHECK(integer_roots(chi) == std::vector<long>{0, 1});
}

TEST_CASE("Euler operator shifts the exponents at infinity") {
    // d^2 + (2/u) d: solutions 1 and 1/u, chi = a(a-1) + 2a = a(a+1)
    ScalarDiffOp<Rat> op(std::vector<RfCoeff<Rat>>{
        RfCoeff<Rat>(), rf(P({2}), P({0, 1})), RfCoeff<Rat>(RationalFunction<Rat>::one())});
    CHECK(integer_roots(indicial_at_infinity(op)) == std::vector<long>{-1, 0});
    // non-monic input is rejected
    ScalarDiffOp<Rat> scaled(std::vector<RfCoeff<Rat>>{
        RfCoeff<Rat>(), RfCoeff<Rat>(), rf(P({2}), P({1}))});
    CHECK_THROWS_AS(indicial_at_infinity(scaled), InputError);
}

TEST_CASE("local exponents at an ordinary point of a cleared operator") {
    // u d^2 + d, cleared with Wronskian order 1 at 0: chi = a(a-1) + a = a^2
    ClearedDiffOp<Rat> op(std::vector<PolyCoeff<Rat>>{
        PolyCoeff<Rat>(), PolyCoeff<Rat>(P({1})), PolyCoeff<Rat>(P({0, 1}))});
    auto chi = indicial_at_point(op, Rat(0), 1);
    CHECK(integer_roots(chi) == std::vector<long>{0, 0});
    // at a point where nothing vanishes, order 0 gives the ordinary exponents
    auto chi1 = indicial_at_point(op, Rat(1), 0);
    CHECK(integer_roots(chi1) == std::vector<long>{0, 1});
}

TEST_CASE("exponent 0 and 2 at a simple zero of the leading coefficient") {
    // (u^2-1) d^2 - 2u d + 2 annihilates u^2+1 and u; at u=1 the kernel
    // functions take values with a simple ramification: exponents 0, 2
    ClearedDiffOp<Rat> op(std::vector<PolyCoeff<Rat>>{
        PolyCoeff<Rat>(P({2})), PolyCoeff<Rat>(P({0, -2})), PolyCoeff<Rat>(P({-1, 0, 1}))});
    CHECK(apply_op(op, P({1, 0, 1})).is_zero());
    CHECK(apply_op(op, P({0, 1})).is_zero());
    CHECK(integer_roots(indicial_at_point(op, Rat(1), 1)) == std::vector<long>{0, 2});
    CHECK(integer_roots(indicial_at_point(op, Rat(-1), 1)) == std::vector<long>{0, 2});
    CHECK(integer_roots(indicial_at_point(op, Rat(5), 0)) == std::vector<long>{0, 1});
}

TEST_CASE("integer root extraction with multiplicity") {
    CHECK(integer_roots(P({6, -5, 1})) == std::vector<long>{2, 3});
    CHECK(integer_roots(P({-6, 1, 1})) == std::vector<long>{-3, 2});
    CHECK(integer_roots(P({0, 0, 1})) == std::vector<long>{0, 0});
    CHECK(integer_roots(P({4, -4, 1})) == std::vector<long>{2, 2});
    CHECK_THROWS_AS(integer_roots(P({-1, 0, 2})), CheckError);  // roots +-1/sqrt(2)
    CHECK_THROWS_AS(integer_roots(P({-1, 2})), CheckError);     // root 1/2
    CHECK(integer_roots(P({7})).empty());
}

TEST_CASE("integer roots tolerate float noise near true roots") {
    Polynomial<Cplx> p(std::vector<Cplx>{Cplx(2 + 1e-12, 0), Cplx(-3, 1e-13), Cplx(1, 0)});
    CHECK(integer_roots(p, 1e-8) == std::vector<long>{1, 2});
    Polynomial<Cplx> off(std::vector<Cplx>{Cplx(2.1, 0), Cplx(-3, 0), Cplx(1, 0)});
    CHECK_THROWS_AS(integer_roots(off, 1e-8), CheckError);
}
