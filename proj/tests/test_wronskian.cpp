#include <doctest.h>

#include <random>

#include "gaudin/multipoly.hpp"
#include "gaudin/wronskian.hpp"

using namespace gaudin;

namespace {

Polynomial<Rat> P(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rat>(std::move(v));
}

Polynomial<Rat> rand_poly(std::mt19937& g, int maxdeg) {
    std::uniform_int_distribution<long> e(-6, 6);
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<Rat> c;
    int deg = d(g);
    for (int i = 0; i <= deg; ++i) c.emplace_back(e(g));
    return Polynomial<Rat>(std::move(c));
}

}  // namespace

TEST_CASE("small Wronskians by hand") {
    CHECK(wronskian<Rat>({P({1})}) == P({1}));
    CHECK(wronskian<Rat>({P({1}), P({0, 1})}) == P({1}));  // det [[1,0],[u,1]]
    CHECK(wronskian<Rat>({P({0, 1}), P({1})}) == P({-1}));
    CHECK(wronskian<Rat>({P({0, 0, 1}), P({0, 1})}) == P({0, 0, -1}));  // u^2*1 - 2u*u
    // full basis of degree < 3: constant Wronskian
    CHECK(wronskian<Rat>({P({1}), P({0, 1}), P({0, 0, 1})}) == P({2}));
}

TEST_CASE("Wronskian of a two-plane with symbolic chart coordinates") {
    // plane spanned by u^3 + x0 u^2 + x1 and u + x2, generic coordinates kept
    // as variables; the determinant collapses to four monomials
    using MP = MultiPoly;
    auto X0 = MP::variable(0), X1 = MP::variable(1), X2 = MP::variable(2);
    auto c = [](long v) { return MP(Rat(v)); };
    Polynomial<MP> f1(std::vector<MP>{X1, c(0), X0, c(1)});
    Polynomial<MP> f2(std::vector<MP>{X2, c(1)});
    Polynomial<MP> w = wronskian<MP>({f1, f2});

    Polynomial<MP> expect(std::vector<MP>{
        X1,                        // constant term
        c(-2) * X0 * X2,           // u
        c(0) - X0 - c(3) * X2,     // u^2
        c(-2)});                   // u^3
    REQUIRE(w.degree_or(-1) == 3);
    for (int i = 0; i <= 3; ++i) CHECK((w.coeff(i) - expect.coeff(i)).is_zero());
}

TEST_CASE("monic split returns the leading unit") {
    auto [m, lead] = wronskian_monic<Rat>({P({0, 0, 1}), P({0, 1})});
    CHECK(lead == Rat(-1));
    CHECK(m == P({0, 0, 1}));
    CHECK_THROWS_AS(wronskian_monic<Rat>({P({0, 1}), P({0, 2})}), CheckError);
}

TEST_CASE("guard rails on tuple size") {
    CHECK_THROWS_AS(wronskian<Rat>({}), InputError);
    std::vector<Polynomial<Rat>> seven(7, P({1}));
    CHECK_THROWS_AS(wronskian<Rat>(seven), InputError);
}

TEST_CASE("antisymmetry under swapping two functions, seeded") {
    std::mt19937 g(20240901);
    for (int t = 0; t < 100; ++t) {
        auto a = rand_poly(g, 4), b = rand_poly(g, 4);
        CHECK(wronskian<Rat>({a, b}) == -wronskian<Rat>({b, a}));
        auto c = rand_poly(g, 3);
        CHECK(wronskian<Rat>({a, b, c}) == -wronskian<Rat>({c, b, a}));
    }
}

TEST_CASE("row shears leave the Wronskian fixed, seeded") {
    std::mt19937 g(20240902);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int t = 0; t < 100; ++t) {
        auto a = rand_poly(g, 4), b = rand_poly(g, 4);
        Rat c(e(g));
        CHECK(wronskian<Rat>({a + c * b, b}) == wronskian<Rat>({a, b}));
        // scaling one row scales the determinant
        if (c != 0) CHECK(wronskian<Rat>({c * a, b}) == c * wronskian<Rat>({a, b}));
    }
}
