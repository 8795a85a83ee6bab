#include <doctest.h>

#include "gaudin/characters.hpp"
#include "gaudin/modulerep.hpp"

using namespace gaudin;

TEST_CASE("chart exponents and coordinate degrees") {
    CHECK(cell_exponents(2, Partition({2, 1})) == std::vector<long>{3, 1});
    CHECK(cell_exponents(2, Partition({1, 1})) == std::vector<long>{2, 1});
    CHECK(cell_exponents(3, Partition({1, 1, 1})) == std::vector<long>{3, 2, 1});
    auto degs = cell_coordinate_degrees(2, Partition({2, 1}));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{1, 1, 3});
    auto d2 = cell_coordinate_degrees(3, Partition({1, 1, 1}));
    std::sort(d2.begin(), d2.end());
    CHECK(d2 == std::vector<long>{1, 2, 3});
}

TEST_CASE("graded series of a chart is a product of geometric factors") {
    // degrees 1,1,3: coefficients of 1/((1-q)^2 (1-q^3))
    auto s = graded_character_cell(2, Partition({2, 1}), 5, 8);
    CHECK(s.coeff(0) == Rat(1));
    CHECK(s.coeff(1) == Rat(2));
    CHECK(s.coeff(2) == Rat(3));
    CHECK(s.coeff(3) == Rat(5));
    CHECK(s.coeff(4) == Rat(7));
    CHECK(s.coeff(5) == Rat(9));
    CHECK(s.coeff(6) == Rat(12));
}

TEST_CASE("graded highest weight series of the divisor-power module") {
    // two-row shape (2,1): the singular component sits in degrees 1 and 2
    auto w = graded_character_weyl(2, Partition({2, 1}), 10);
    QSeries expect(10);
    expect += QSeries::monomial(1, 10);
    expect += QSeries::monomial(2, 10);
    CHECK(w == expect);
    // single column (1,1): one singular vector in degree 1
    CHECK(graded_character_weyl(2, Partition({1, 1}), 10) == QSeries::monomial(1, 10));
    // single row: the highest weight line sits in degree 0
    CHECK(graded_character_weyl(2, Partition({3}), 10) == QSeries::one(10));
}

TEST_CASE("normalized series identity links module and chart gradings") {
    // ch / (q)_n == q^{sum (i-1) lambda_i} * chart series
    struct Case {
        int N;
        Partition lam;
        long shift;
    };
    for (const Case& c : {Case{2, Partition({2, 1}), 1}, Case{2, Partition({2, 2}), 2},
                          Case{2, Partition({4}), 0}, Case{3, Partition({1, 1, 1}), 3},
                          Case{3, Partition({2, 2, 1}), 4}, Case{3, Partition({2, 1}), 1}}) {
        int n = int(c.lam.size());
        int trunc = 16;
        int d = int(std::max(c.lam.part(1) + c.N, long(n + c.N)));
        auto lhs = graded_character_weyl(c.N, c.lam, trunc) / q_pochhammer(n, trunc);
        auto rhs = QSeries::monomial(int(c.shift), trunc) *
                   graded_character_cell(c.N, c.lam, d, trunc);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tableau counts by shape") {
    CHECK(standard_tableau_count(2, Partition({1})) == Rat(1));
    CHECK(standard_tableau_count(2, Partition({1, 1})) == Rat(1));
    CHECK(standard_tableau_count(2, Partition({2, 1})) == Rat(2));
    CHECK(standard_tableau_count(2, Partition({2, 2})) == Rat(2));
    CHECK(standard_tableau_count(2, Partition({3, 1})) == Rat(3));
    CHECK(standard_tableau_count(3, Partition({2, 1, 1})) == Rat(3));
    CHECK(standard_tableau_count(3, Partition({2, 2, 1})) == Rat(5));
    CHECK(standard_tableau_count(3, Partition({3, 2, 1})) == Rat(16));
}

TEST_CASE("series value at q=1 equals the singular space dimension") {
    struct Case {
        int N;
        Partition lam;
    };
    for (const Case& c : {Case{2, Partition({2, 1})}, Case{2, Partition({2, 2})},
                          Case{2, Partition({3, 1})}, Case{3, Partition({1, 1, 1})},
                          Case{3, Partition({2, 1})}, Case{3, Partition({2, 1, 1})}}) {
        long n = c.lam.size();
        auto w = graded_character_weyl(c.N, c.lam, 64);
        CHECK(w.coefficient_sum() == Rat(tensor_power_singular_dimension(c.N, int(n), c.lam)));
        CHECK(w.coefficient_sum() == standard_tableau_count(c.N, c.lam));
    }
}

TEST_CASE("series truncation shrinks to the smaller operand") {
    auto a = QSeries::one(10);
    auto b = QSeries::one(5);
    CHECK((a * b).trunc() == 5);
    CHECK((a + b).trunc() == 5);
    auto r = (QSeries::one(6) - QSeries::monomial(1, 6)).reciprocal();
    for (int k = 0; k <= 6; ++k) CHECK(r.coeff(k) == Rat(1));
}
