#include <doctest.h>

#include <random>

#include "gaudin/diffop.hpp"

using namespace gaudin;

namespace {

Polynomial<Rat> P(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rat>(std::move(v));
}

ClearedDiffOp<Rat> op_from(std::vector<Polynomial<Rat>> coeffs) {
    std::vector<PolyCoeff<Rat>> c;
    for (auto& p : coeffs) c.emplace_back(std::move(p));
    return ClearedDiffOp<Rat>(std::move(c));
}

Polynomial<Rat> rand_poly(std::mt19937& g, int maxdeg) {
    std::uniform_int_distribution<long> e(-4, 4);
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<Rat> c;
    int deg = d(g);
    for (int i = 0; i <= deg; ++i) c.emplace_back(e(g));
    return Polynomial<Rat>(std::move(c));
}

}  // namespace

TEST_CASE("left composition with d obeys the Leibniz shift") {
    // op = u (multiplication), d.op = u d + 1
    auto mul_u = op_from({P({0, 1})});
    auto d_mul = mul_u.d_compose();
    REQUIRE(d_mul.order_or(-1) == 1);
    CHECK(d_mul.coeff(1).v == P({0, 1}));
    CHECK(d_mul.coeff(0).v == P({1}));
    // applied to f: (u f)' = u f' + f for f = u^3
    auto f = P({0, 0, 0, 1});
    CHECK(apply_op(d_mul, f) == (P({0, 1}) * f).derivative());
}

TEST_CASE("operator product is composition, apply order right to left") {
    std::mt19937 g(7);
    auto a = op_from({rand_poly(g, 2), rand_poly(g, 2)});
    auto b = op_from({rand_poly(g, 2), rand_poly(g, 2), rand_poly(g, 2)});
    auto f = rand_poly(g, 4);
    CHECK(apply_op(a * b, f) == apply_op(a, apply_op(b, f)));
    CHECK(apply_op(b * a, f) == apply_op(b, apply_op(a, f)));
    // d * u - u * d = 1
    auto d = op_from({P({}), P({1})});
    auto mul_u = op_from({P({0, 1})});
    auto comm = d * mul_u - mul_u * d;
    REQUIRE(comm.order_or(-1) == 0);
    CHECK(comm.coeff(0).v == P({1}));
}

TEST_CASE("order bookkeeping and zero trimming") {
    CHECK(ClearedDiffOp<Rat>().is_zero());
    CHECK(!ClearedDiffOp<Rat>().order().has_value());
    auto a = op_from({P({1}), P({0})});
    CHECK(a.order_or(-1) == 0);  // trailing zero coefficient trimmed
    auto b = op_from({P({1}), P({2})});
    CHECK((b - b).is_zero());
    CHECK(b.coeff(5).is_zero());  // past the order reads as a structural zero
}

TEST_CASE("row determinant of a diagonal matrix is the row-ordered product") {
    using Op = ClearedDiffOp<Rat>;
    auto d = op_from({P({}), P({1})});
    auto mul_u = op_from({P({0, 1})});
    std::vector<std::vector<Op>> m{{d, Op()}, {Op(), mul_u}};
    // row order puts the first row leftmost: d * u = u d + 1
    auto det = rdet(m);
    CHECK(det == d * mul_u);
    CHECK(det.coeff(0).v == P({1}));
}

TEST_CASE("row determinant keeps noncommutative cross terms in row order") {
    using Op = ClearedDiffOp<Rat>;
    auto d = op_from({P({}), P({1})});
    auto one = op_from({P({1})});
    auto mul_u = op_from({P({0, 1})});
    // [[d, 1], [u, d]] -> d*d - 1*u, products taken first row then second
    std::vector<std::vector<Op>> m{{d, one}, {mul_u, d}};
    auto det = rdet(m);
    auto expect = d * d - one * mul_u;
    CHECK(det == expect);
    auto f = P({0, 0, 0, 1});
    CHECK(apply_op(det, f) == P({0, 6}) - P({0, 0, 0, 0, 1}));
}

TEST_CASE("row determinant rejects bad shapes") {
    using Op = ClearedDiffOp<Rat>;
    CHECK_THROWS_AS(rdet(std::vector<std::vector<Op>>{}), InputError);
    std::vector<std::vector<Op>> ragged{{Op(), Op()}, {Op()}};
    CHECK_THROWS_AS(rdet(ragged), InputError);
    std::vector<std::vector<Op>> big(6, std::vector<Op>(6));
    CHECK_THROWS_AS(rdet(big), InputError);
}

TEST_CASE("rational coefficient operators clear against their denominators") {
    // op = d + 1/(u-1): applying to (u-1) gives 1 + 1 = 2... times nothing else
    RationalFunction<Rat> pole(P({1}), P({-1, 1}));
    ScalarDiffOp<Rat> op(std::vector<RfCoeff<Rat>>{RfCoeff<Rat>(pole),
                                                   RfCoeff<Rat>(RationalFunction<Rat>::one())});
    auto r = apply_op(op, P({-1, 1}));
    CHECK(r == RationalFunction<Rat>(P({2})));
}

TEST_CASE("composition is associative on seeded random operators") {
    std::mt19937 g(20240901);
    for (int t = 0; t < 100; ++t) {
        auto a = op_from({rand_poly(g, 1), rand_poly(g, 1)});
        auto b = op_from({rand_poly(g, 1), rand_poly(g, 1)});
        auto c = op_from({rand_poly(g, 1), rand_poly(g, 1)});
        CHECK((a * b) * c == a * (b * c));
        auto f = rand_poly(g, 3);
        CHECK(apply_op(a * (b + c), f) == apply_op(a * b, f) + apply_op(a * c, f));
    }
}
