#include "doctest.h"
#include "helpers.hpp"

using namespace valsemi;
using testutil::q;
using testutil::rand_matrix;

namespace {

std::vector<SupportSet> sets(std::size_t ground,
                             std::initializer_list<std::vector<int>> lists) {
    std::vector<SupportSet> out;
    for (const auto& l : lists) out.push_back(SupportSet::of_labels(l, ground));
    return out;
}

}  // namespace

TEST_CASE("minimal supports of the full space are the singletons") {
    const auto fam = minimal_supports_of_subspace(
        ExactMatrix::identity(3, Field::rationals()));
    CHECK(fam.circuits() == sets(3, {{1}, {2}, {3}}));
}

TEST_CASE("minimal supports of a planar evaluation image are the pairs") {
    const ExactMatrix g = ExactMatrix::from_rows(
        {{q(1), q(0), q(-1)}, {q(0), q(1), q(-1)}});
    const auto fam = minimal_supports_of_subspace(g);
    CHECK(fam.circuits() == sets(3, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("minimal supports with a split coordinate") {
    // rows span the image of the coplanar-triple degree-one evaluation
    const ExactMatrix g = ExactMatrix::from_rows({{q(1), q(0), q(0), q(0)},
                                                  {q(0), q(1), q(0), q(2)},
                                                  {q(0), q(0), q(1), q(3)}});
    const auto fam = minimal_supports_of_subspace(g);
    CHECK(fam.circuits() == sets(4, {{1}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("circuit witnesses realize their supports") {
    const ExactMatrix g = ExactMatrix::from_rows(
        {{q(1), q(0), q(-1)}, {q(0), q(1), q(-1)}});
    const auto fam = minimal_supports_of_subspace(g);
    REQUIRE(fam.witnesses().size() == fam.circuit_count());
    for (const auto& w : fam.witnesses()) {
        const auto vec = g.apply_left(w.combo);
        for (std::size_t i = 0; i < vec.size(); ++i)
            CHECK(vec[i].is_zero() == !w.circuit.contains(static_cast<int>(i) + 1));
    }
}

TEST_CASE("scrawl axioms") {
    const auto pairs = ScrawlFamily::from_circuits(3, sets(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(verify_scrawl_axioms(pairs).pass);

    CHECK_THROWS_AS(ScrawlFamily::from_circuits(3, sets(3, {{1}, {1, 2}})), Error);
    CHECK_THROWS_AS(ScrawlFamily::from_circuits(3, sets(3, {{}})), Error);

    const auto disjoint = ScrawlFamily::from_circuits(4, sets(4, {{1, 2}, {3, 4}}));
    CHECK(verify_scrawl_axioms(disjoint).pass);

    // a family failing elimination: {1,2} and {1,3} meet at 1 but {2,3}
    // contains no member
    const auto broken = ScrawlFamily::from_circuits(3, sets(3, {{1, 2}, {1, 3}}));
    const auto rep = verify_scrawl_axioms(broken);
    CHECK(!rep.pass);
    CHECK(!rep.counterexample.empty());
}

TEST_CASE("subspace support families satisfy the scrawl axioms") {
    OracleRng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t r = 2 + rng.below(5);
        const std::size_t k = 1 + rng.below(3);
        const ExactMatrix g = rand_matrix(rng, k, r, Field::rationals());
        const auto fam = minimal_supports_of_subspace(g);
        CHECK(verify_scrawl_axioms(fam).pass);

        // sampled vectors of the row space have supports inside the closure
        for (int s = 0; s < 10; ++s) {
            std::vector<Scalar> x;
            for (std::size_t i = 0; i < k; ++i)
                x.push_back(testutil::rand_scalar(rng, Field::rationals()));
            const auto w = g.apply_left(x);
            uint32_t bits = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (!w[i].is_zero()) bits |= uint32_t{1} << i;
            if (bits == 0) continue;
            CHECK(fam.generates(SupportSet(bits, r)));
        }
    }
}

TEST_CASE("rank function basics") {
    // columns e1, e2, e1+e2 in F^2
    const RankMatroid m(ExactMatrix::from_rows({{q(1), q(0), q(1)},
                                                {q(0), q(1), q(1)}}));
    CHECK(m.rank(SupportSet::empty(3)) == 0);
    CHECK(m.rank(SupportSet::of_labels({1}, 3)) == 1);
    CHECK(m.rank(SupportSet::full(3)) == 2);
    CHECK(m.is_simple());
    CHECK(m.is_uniform());
}

TEST_CASE("simplicity fails on loops and parallel pairs") {
    const RankMatroid with_loop(
        ExactMatrix::from_rows({{q(1), q(0)}, {q(0), q(0)}}).transpose());
    CHECK(!with_loop.is_simple());

    const RankMatroid with_parallel(ExactMatrix::from_rows(
        {{q(1), q(2), q(0)}, {q(0), q(0), q(1)}}));
    CHECK(!with_parallel.is_simple());

    const RankMatroid lines(ExactMatrix::from_rows(
        {{q(1), q(0), q(1)}, {q(0), q(1), q(1)}}));
    CHECK(lines.is_simple());
}

TEST_CASE("uniformity detects a coplanar triple") {
    const RankMatroid axes(ExactMatrix::identity(3, Field::rationals()));
    CHECK(axes.is_uniform());

    // v4 = e2 + e3 makes {2,3,4} dependent
    const RankMatroid coplanar(ExactMatrix::from_rows({{q(1), q(0), q(0), q(0)},
                                                       {q(0), q(1), q(0), q(1)},
                                                       {q(0), q(0), q(1), q(1)}}));
    CHECK(!coplanar.is_uniform());

    const RankMatroid planar(ExactMatrix::from_rows(
        {{q(1), q(0), q(1), q(1)}, {q(0), q(1), q(1), q(2)}}));
    CHECK(planar.is_uniform());
}

TEST_CASE("simplification merges parallel classes and removes loops") {
    const RankMatroid simple(ExactMatrix::from_rows(
        {{q(1), q(0), q(1)}, {q(0), q(1), q(1)}}));
    const auto [s1, map1] = simple.simplify();
    CHECK(s1.ground() == 3);
    CHECK(map1.loops.is_empty());
    CHECK(map1.class_of == std::vector<int>{1, 2, 3});

    // columns e1, 2*e1, e2
    const RankMatroid parallel(ExactMatrix::from_rows(
        {{q(1), q(2), q(0)}, {q(0), q(0), q(1)}}));
    const auto [s2, map2] = parallel.simplify();
    CHECK(s2.ground() == 2);
    CHECK(map2.class_of == std::vector<int>{1, 1, 2});
    CHECK(map2.representatives == std::vector<int>{1, 3});

    // zero column is a loop
    const RankMatroid loopy(ExactMatrix::from_rows(
        {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}}));
    const auto [s3, map3] = loopy.simplify();
    CHECK(map3.loops == SupportSet::of_labels({1}, 3));
    CHECK(s3.ground() == 2);
    CHECK(map3.class_of == std::vector<int>{0, 1, 2});
}

TEST_CASE("rank axioms and simplification consistency on random configurations") {
    OracleRng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = 2 + rng.below(5);  // up to 6
        const std::size_t n = 2 + rng.below(2);
        const RankMatroid m(rand_matrix(rng, n, r, Field::rationals()));

        const uint32_t full = (uint32_t{1} << r) - 1;
        for (uint32_t a = 0; a <= full; ++a) {
            const SupportSet sa(a, r);
            // unit increase
            for (std::size_t i = 0; i < r; ++i) {
                if ((a >> i) & 1u) continue;
                const SupportSet sb(a | (uint32_t{1} << i), r);
                CHECK(m.rank(sa) <= m.rank(sb));
                CHECK(m.rank(sb) <= m.rank(sa) + 1);
            }
            // submodularity
            for (uint32_t b = 0; b <= full; b += 3) {
                const SupportSet sb(b, r);
                CHECK(m.rank(sa.unite(sb)) + m.rank(sa.intersect(sb)) <=
                      m.rank(sa) + m.rank(sb));
            }
        }

        const auto [simp, map] = m.simplify();
        for (uint32_t a = 0; a <= full; ++a) {
            const SupportSet sa(a, r);
            if (!sa.intersect(map.loops).is_empty()) continue;
            uint32_t image = 0;
            for (int l : sa.labels())
                image |= uint32_t{1} << (map.class_of[l - 1] - 1);
            CHECK(m.rank(sa) == simp.rank(SupportSet(image, simp.ground())));
        }
    }
}
