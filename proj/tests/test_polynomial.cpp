#include "doctest.h"
#include "helpers.hpp"

using namespace valsemi;
using testutil::q;

TEST_CASE("polynomial arithmetic drops cancelled terms") {
    const Field f = Field::rationals();
    const Polynomial x = Polynomial::variable(2, 0, f);
    const Polynomial y = Polynomial::variable(2, 1, f);
    const Polynomial p = (x + y) * (x - y);
    CHECK(p.term_count() == 2);  // x^2 - y^2
    CHECK((p - x * x + y * y).is_zero());
    CHECK((x - x).is_zero());
    CHECK(p.to_string() == "x1^2 - x2^2");
}

TEST_CASE("evaluation with the zero-power convention") {
    const Field f = Field::rationals();
    Polynomial p(2, f);
    p.add_term({2, 0}, q(3));
    p.add_term({0, 0}, q(-1));
    CHECK(p.evaluate({q(0), q(5)}) == q(-1));  // 0^0 = 1 keeps the constant
    CHECK(p.evaluate({q(2), q(7)}) == q(11));
}

TEST_CASE("weighted degrees") {
    CHECK(Polynomial::weighted_degree({1, 1}, {1, 3}) == 4);
    CHECK(Polynomial::weighted_degree({3, 0}, {1, 3}) == 3);
    CHECK(Polynomial::weighted_degree({0, 0}, {2, 5}) == 0);
}

TEST_CASE("series products respect the truncation") {
    const Field f = Field::rationals();
    TruncatedSeries a{{{0, q(1)}, {1, q(1)}}, 2};       // 1 + t
    TruncatedSeries b{{{1, q(2)}, {2, q(1)}}, 2};       // 2t + t^2
    const TruncatedSeries ab = series_product(a, b, f);
    // (1 + t)(2t + t^2) = 2t + 3t^2 + t^3, cut at degree 2
    REQUIRE(ab.terms.size() == 2);
    CHECK(ab.terms[0] == std::pair<uint64_t, Scalar>{1, q(2)});
    CHECK(ab.terms[1] == std::pair<uint64_t, Scalar>{2, q(3)});
}
