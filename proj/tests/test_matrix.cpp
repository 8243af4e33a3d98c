#include "doctest.h"
#include "helpers.hpp"

using namespace valsemi;
using testutil::q;
using testutil::rand_matrix;

namespace {

ExactMatrix vandermonde(const std::vector<long long>& nodes, std::size_t cols) {
    ExactMatrix m(nodes.size(), cols, Field::rationals());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, q(nodes[i]).pow(j));
    return m;
}

// independent oracle for the Vandermonde determinant
Scalar product_of_differences(const std::vector<long long>& nodes) {
    Scalar acc = q(1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            acc *= q(nodes[j] - nodes[i]);
    return acc;
}

// independent elimination pass used only by this file
std::vector<Scalar> solve_kernel_by_hand(const ExactMatrix& m) {
    // for a 2x3 rank-2 system: pick x3 = 1 and solve the 2x2 block by Cramer
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    const Scalar det =
        m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    REQUIRE(!det.is_zero());
    const Scalar x1 =
        (-m.at(0, 2) * m.at(1, 1) + m.at(0, 1) * m.at(1, 2)) / det;
    const Scalar x2 =
        (-m.at(0, 0) * m.at(1, 2) + m.at(0, 2) * m.at(1, 0)) / det;
    return {x1, x2, q(1)};
}

bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    REQUIRE(a.size() == b.size());
    Scalar ratio = q(0);
    bool have_ratio = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        const Scalar r = b[i] / a[i];
        if (!have_ratio) {
            ratio = r;
            have_ratio = true;
        } else if (!(r == ratio)) {
            return false;
        }
    }
    return have_ratio;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(ExactMatrix::identity(3, Field::rationals())) == 3);
    CHECK(rank(ExactMatrix(2, 5, Field::rationals())) == 0);
    CHECK(rank(vandermonde({1, 2, 3}, 3)) == 3);
}

TEST_CASE("determinant basics and the Vandermonde oracle") {
    CHECK(determinant(ExactMatrix::identity(4, Field::rationals())).is_one());
    ExactMatrix diag(2, 2, Field::rationals());
    diag.set(0, 0, q(2));
    diag.set(1, 1, q(3));
    CHECK(determinant(diag) == q(6));

    const std::vector<long long> nodes = {1, 2, 3};
    CHECK(determinant(vandermonde(nodes, 3)) == product_of_differences(nodes));
    CHECK(determinant(vandermonde(nodes, 3)) == q(2));

    CHECK_THROWS_AS(determinant(ExactMatrix(2, 3, Field::rationals())), Error);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(ExactMatrix::identity(2, Field::rationals())).empty());

    ExactMatrix row(1, 2, Field::rationals());
    row.set(0, 0, q(1));
    row.set(0, 1, q(1));
    const auto basis = kernel_basis(row);
    REQUIRE(basis.size() == 1);
    CHECK(proportional(basis[0], {q(1), q(-1)}));

    const ExactMatrix vdm = vandermonde({1, 2}, 3);
    const auto k = kernel_basis(vdm);
    REQUIRE(k.size() == 1);
    CHECK(proportional(k[0], solve_kernel_by_hand(vdm)));
    for (const Scalar& y : vdm.apply(k[0])) CHECK(y.is_zero());
}

TEST_CASE("field mismatch is rejected at entry insertion") {
    ExactMatrix m(1, 1, Field::rationals());
    CHECK_THROWS_WITH_AS(m.set(0, 0, Scalar::residue(1, Field::prime(7))),
                         "field mismatch", Error);
}

TEST_CASE("rank and kernel invariants on random matrices") {
    for (const Field& f : {Field::rationals(), Field::prime(101)}) {
        OracleRng rng(42);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng.below(5);
            const std::size_t cols = 1 + rng.below(5);
            const ExactMatrix m = rand_matrix(rng, rows, cols, f);

            const std::size_t rk = rank(m);
            CHECK(rk == rank(m.transpose()));
            const auto kernel = kernel_basis(m);
            CHECK(cols == rk + kernel.size());
            for (const auto& x : kernel)
                for (const Scalar& y : m.apply(x)) CHECK(y.is_zero());
        }
    }
}

TEST_CASE("determinant vanishes exactly on rank-deficient squares") {
    OracleRng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const ExactMatrix m = rand_matrix(rng, n, n, Field::rationals());
        CHECK(determinant(m).is_zero() == (rank(m) < n));
    }
}
