#include "doctest.h"
#include "helpers.hpp"

using namespace valsemi;
using testutil::INF;
using testutil::q;
using testutil::vec;

namespace {

Polynomial var(std::size_t n, std::size_t j) {
    return Polynomial::variable(n, j, Field::rationals());
}

}  // namespace

TEST_CASE("validation enforces the zero-weight convention") {
    CHECK_THROWS_AS(ToricArrangement(2, 2, Field::rationals(),
                                     {{q(1), q(0)}, {q(1), q(1)}},
                                     {{1, 1}, {1, 1}}),
                    Error);
    CHECK_THROWS_AS(ToricArrangement(2, 2, Field::rationals(),
                                     {{q(1), q(1)}, {q(1), q(1)}},
                                     {{1, 0}, {1, 1}}),
                    Error);
}

TEST_CASE("prime fields must exceed both r and the degree cap") {
    const Field f5 = Field::prime(5);
    auto coeffs = [&](std::size_t r) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < r; ++i)
            rows.push_back({Scalar::integer(1, f5), Scalar::integer(i, f5)});
        return rows;
    };
    // p = 5 with r = 5 violates p > r
    CHECK_THROWS_AS(ToricArrangement::lines(coeffs(5), 3), Error);
    // p = 5 with cap 64 violates p > cap
    CHECK_THROWS_AS(ToricArrangement::lines(coeffs(3), 64), Error);
    // p = 5, r = 3, cap 4 is fine
    CHECK_NOTHROW(ToricArrangement::lines(coeffs(3), 4));
}

TEST_CASE("JSON loading names the offending entry") {
    CHECK_THROWS_AS(ToricArrangement::from_json_text("not json"), Error);
    CHECK_THROWS_WITH_AS(
        ToricArrangement::from_json_text(
            R"({"n":2,"r":1,"coeffs":[[1,"x/y"]]})"),
        "malformed rational scalar: \"x/y\"", Error);
    try {
        ToricArrangement::from_json_text(R"({"n":2,"r":2,"coeffs":[[1,0]]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("coeffs") != std::string::npos);
    }
    const auto arr = ToricArrangement::from_json_text(
        R"({"n":2,"r":2,"field":{"type":"rational"},"coeffs":[["1/2",0],[0,"-3/4"]]})");
    CHECK(arr.coeff(0, 0) == q(1, 2));
    CHECK(arr.coeff(1, 1) == q(-3, 4));
    CHECK(arr.weight(0, 1) == 0);  // default weights follow the zero pattern
    CHECK(arr.is_line_arrangement());
}

TEST_CASE("graded components split by the branch weight row") {
    const auto arr = testutil::planar3();
    const Polynomial f1 = var(2, 0) + var(2, 1);
    auto pieces = arr->graded_components(f1, 0);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces.count(1) == 1);

    // weights (2, 1): x1 and x2^2 share weighted degree 2
    const ToricArrangement warr(2, 1, Field::rationals(), {{q(1), q(1)}},
                                {{2, 1}});
    const Polynomial f2 = var(2, 0) + var(2, 1) * var(2, 1);
    pieces = warr.graded_components(f2, 0);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces.at(2).term_count() == 2);

    // weights (1, 3): x1*x2 has weight 4, x1^3 weight 3
    const ToricArrangement warr2(2, 1, Field::rationals(), {{q(1), q(1)}},
                                 {{1, 3}});
    const Polynomial f3 = var(2, 0) * var(2, 1) + var(2, 0) * var(2, 0) * var(2, 0);
    pieces = warr2.graded_components(f3, 0);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces.at(4).term_count() == 1);
    CHECK(pieces.at(3).term_count() == 1);

    // the pieces always sum back to f
    Polynomial sum(2, Field::rationals());
    for (const auto& [d, piece] : pieces) sum = sum + piece;
    CHECK(sum == f3);
}

TEST_CASE("branch series of coordinates, constants and vanishing products") {
    const auto arr = testutil::planar3();
    // x_j maps to (v_ij t^1)_i
    const auto sx = arr->branch_series(var(2, 0), 5);
    REQUIRE(sx.branches.size() == 3);
    CHECK(sx.branches[0].terms ==
          std::vector<std::pair<uint64_t, Scalar>>{{1, q(1)}});
    CHECK(sx.branches[1].terms.empty());
    CHECK(sx.branches[2].terms ==
          std::vector<std::pair<uint64_t, Scalar>>{{1, q(1)}});

    const auto s1 = arr->branch_series(Polynomial::constant(2, q(1)), 5);
    for (const auto& b : s1.branches)
        CHECK(b.terms == std::vector<std::pair<uint64_t, Scalar>>{{0, q(1)}});

    // on the axes arrangement x1*x2 dies on every branch
    const auto ax = testutil::axes(2);
    const auto sprod = ax->branch_series(var(2, 0) * var(2, 1), 6);
    for (const auto& b : sprod.branches) CHECK(b.terms.empty());
}

TEST_CASE("valuation basics") {
    const auto arr = testutil::planar3();
    CHECK(arr->valuation(Polynomial(2, Field::rationals())) ==
          ValVector::all_infinite(3));
    CHECK(arr->valuation(Polynomial::constant(2, q(1))) == ValVector::zeros(3));
    CHECK(arr->valuation(Polynomial::constant(2, q(-1))) == ValVector::zeros(3));
    CHECK(arr->valuation(var(2, 0) - var(2, 1)) == vec({1, 1, INF}));
}

TEST_CASE("monomial basis order is highest-variable major") {
    const auto arr = testutil::planar3();
    CHECK(arr->monomial_basis(2) ==
          std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});

    // all weights 2: odd degrees are empty
    const ToricArrangement even(2, 2, Field::rationals(),
                                {{q(1), q(1)}, {q(1), q(-1)}},
                                {{2, 2}, {2, 2}});
    CHECK(even.monomial_basis(3).empty());

    const auto ax3 = testutil::axes(3);
    CHECK(ax3->monomial_basis(1) ==
          std::vector<Exponent>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("evaluation matrices") {
    const auto arr = testutil::planar3();
    // degree 0: all-ones column
    const ExactMatrix e0 = arr->evaluation_matrix(0);
    CHECK(e0.cols() == 1);
    for (std::size_t i = 0; i < 3; ++i) CHECK(e0.at(i, 0).is_one());

    // degree 1 equals the coefficient grid up to the column convention
    const ExactMatrix e1 = arr->evaluation_matrix(1);
    REQUIRE(e1.cols() == 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(e1.at(i, 0) == arr->coeff(i, 1));  // x2 column first
        CHECK(e1.at(i, 1) == arr->coeff(i, 0));
    }

    // degree 2 rows over the basis [x2^2, x1*x2, x1^2]
    const ExactMatrix e2 = arr->evaluation_matrix(2);
    REQUIRE(e2.cols() == 3);
    auto row = [&](std::size_t i) {
        return std::vector<Scalar>{e2.at(i, 0), e2.at(i, 1), e2.at(i, 2)};
    };
    CHECK(row(0) == std::vector<Scalar>{q(0), q(0), q(1)});
    CHECK(row(1) == std::vector<Scalar>{q(1), q(0), q(0)});
    CHECK(row(2) == std::vector<Scalar>{q(1), q(1), q(1)});
}

TEST_CASE("coefficient matrices agree with evaluation matrices on lines") {
    const auto arr = testutil::planar({2, -3, 5});
    std::vector<std::vector<Scalar>> grid;
    for (std::size_t i = 0; i < arr->branch_count(); ++i)
        grid.push_back(arr->branch_vector(i));
    for (uint64_t d = 1; d <= 4; ++d) {
        const ExactMatrix c = coefficient_matrix(grid, d);
        const ExactMatrix e = arr->evaluation_matrix(d);
        REQUIRE(c.cols() == e.cols());
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                CHECK(c.at(i, j) == e.at(i, j));
        // distinct slopes give maximal rank at every degree
        CHECK(rank(c) == std::min<std::size_t>(5, d + 1));
    }
    CHECK(coefficient_matrix(grid, 1).cols() == 2);

    std::vector<std::vector<Scalar>> grid3(4, {q(1), q(2), q(3)});
    CHECK(coefficient_matrix(grid3, 2).cols() == 6);
}

TEST_CASE("essentiality") {
    CHECK(testutil::axes(3)->is_essential());
    CHECK(testutil::planar3()->is_essential());
    // all branches inside a hyperplane
    CHECK(!ToricArrangement::lines({{q(1), q(0)}, {q(2), q(0)}}).is_essential());
    // repeated branch vector
    CHECK(!ToricArrangement::lines(
               {{q(1), q(1)}, {q(1), q(1)}, {q(0), q(1)}})
               .is_essential());
}

TEST_CASE("very uniform checks") {
    CHECK(is_very_uniform(*testutil::planar({1, 2, 3})).very_uniform);
    CHECK(is_very_uniform(*testutil::variation_uniform()).very_uniform);

    // The coplanar-triple case passes the literal full-matrix rank test even
    // though its degree-one matroid is not uniform: C_1 is 4x3 of rank 3 and
    // C_2 is 4x6 of rank 4.
    const auto check = is_very_uniform(*testutil::variation_coplanar());
    CHECK(check.very_uniform);
    CHECK(check.threshold_degree == 2);
    const RankMatroid m(testutil::variation_coplanar()->coefficient_grid().transpose());
    CHECK(!m.is_uniform());

    CHECK_THROWS_AS(is_very_uniform(*testutil::weighted12()), Error);
}

TEST_CASE("valuation axioms on random polynomials") {
    OracleRng rng(61);
    const auto arr = testutil::planar3();
    for (int t = 0; t < 150; ++t) {
        const Polynomial f = testutil::rand_poly(rng, *arr, 3, 4);
        const Polynomial g = testutil::rand_poly(rng, *arr, 3, 4);
        const ValVector vf = arr->valuation(f), vg = arr->valuation(g);
        CHECK(arr->valuation(f * g) == odot(vf, vg));
        const ValVector vsum = arr->valuation(f + g);
        CHECK(leq(oplus(vf, vg), vsum));
        bool all_differ = true;
        for (std::size_t i = 0; i < 3; ++i)
            if (vf[i] == vg[i]) all_differ = false;
        if (all_differ) CHECK(vsum == oplus(vf, vg));
    }
}

TEST_CASE("branch series multiply like the polynomials up to truncation") {
    OracleRng rng(67);
    const auto arr = testutil::planar3();
    const uint64_t t = 6;
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = testutil::rand_poly(rng, *arr, 3, 3);
        const Polynomial g = testutil::rand_poly(rng, *arr, 3, 3);
        const auto lhs = arr->branch_series(f * g, t);
        const auto rhs = series_product(arr->branch_series(f, t),
                                        arr->branch_series(g, t), arr->field());
        REQUIRE(lhs.branches.size() == rhs.branches.size());
        for (std::size_t i = 0; i < lhs.branches.size(); ++i)
            CHECK(lhs.branches[i].terms == rhs.branches[i].terms);
    }
}

TEST_CASE("valuation equals the per-degree support recombination") {
    OracleRng rng(71);
    const auto arr = testutil::variation_uniform();
    for (int t = 0; t < 80; ++t) {
        const Polynomial f = testutil::rand_poly(rng, *arr, 2, 5);
        ValVector expected = ValVector::all_infinite(4);
        for (const auto& [d, piece] : arr->graded_components(f, 0)) {
            std::vector<ExtNat> coords(4, ExtNat::infinity());
            for (std::size_t i = 0; i < 4; ++i)
                if (!piece.evaluate(arr->branch_vector(i)).is_zero())
                    coords[i] = ExtNat(d);
            expected = oplus(expected, ValVector(std::move(coords)));
        }
        CHECK(arr->valuation(f) == expected);
    }
}

TEST_CASE("random coefficient grids have maximal-rank coefficient matrices") {
    OracleRng rng(73);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t r = 3; r <= 5; ++r) {
            for (uint64_t d = 1; d <= 3; ++d) {
                for (int rep = 0; rep < 10; ++rep) {
                    std::vector<std::vector<Scalar>> grid(r);
                    for (auto& row : grid)
                        for (std::size_t j = 0; j < n; ++j)
                            row.push_back(testutil::rand_scalar(rng, Field::rationals()));
                    const ExactMatrix c = coefficient_matrix(grid, d);
                    CHECK(rank(c) == std::min<std::size_t>(r, c.cols()));
                }
            }
        }
    }
}
