#include "doctest.h"
#include "helpers.hpp"

using namespace valsemi;
using testutil::INF;
using testutil::vec;

namespace {

ValVector rand_vec(OracleRng& rng, std::size_t r) {
    std::vector<ExtNat> c(r);
    for (std::size_t i = 0; i < r; ++i) {
        const uint64_t roll = rng.below(8);
        c[i] = roll == 7 ? ExtNat::infinity() : ExtNat(roll);
    }
    return ValVector(std::move(c));
}

}  // namespace

TEST_CASE("oplus is the coordinatewise minimum") {
    CHECK(oplus(vec({1, INF}), vec({INF, 2})) == vec({1, 2}));
    const ValVector a = vec({3, 1, 2});
    CHECK(oplus(a, a) == a);
    CHECK(oplus(vec({3, 1, 2}), vec({2, 4, 2})) == vec({2, 1, 2}));
    CHECK_THROWS_AS(oplus(vec({1}), vec({1, 2})), Error);
}

TEST_CASE("odot is the coordinatewise sum with absorbing infinity") {
    CHECK(odot(vec({1, 2}), vec({0, 0})) == vec({1, 2}));
    CHECK(odot(vec({1, INF}), vec({2, 3})) == vec({3, INF}));
    CHECK(odot(vec({4, 4, 4}), vec({2, 2, 2})) == vec({6, 6, 6}));
}

TEST_CASE("the idempotent order is the product order") {
    const ValVector any = vec({5, INF, 0});
    CHECK(leq(ValVector::zeros(3), any));
    CHECK(leq(any, ValVector::all_infinite(3)));
    CHECK(leq(vec({1, 2}), vec({1, 3})));
    CHECK(!leq(vec({1, 2}), vec({2, 1})));
}

TEST_CASE("support and complement") {
    CHECK(support(vec({1, INF, 0})) == SupportSet::of_labels({1, 3}, 3));
    CHECK(support(ValVector::all_infinite(4)).is_empty());
    CHECK(support(vec({1, 2, 3})) == SupportSet::full(3));

    CHECK(SupportSet::empty(3).complement() == SupportSet::full(3));
    CHECK(SupportSet::of_labels({1}, 3).complement() ==
          SupportSet::of_labels({2, 3}, 3));
}

TEST_CASE("de Morgan over random support pairs") {
    OracleRng rng(3);
    for (int t = 0; t < 200; ++t) {
        const SupportSet a(static_cast<uint32_t>(rng.below(32)), 5);
        const SupportSet b(static_cast<uint32_t>(rng.below(32)), 5);
        CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
        CHECK(a.intersect(b).complement() == a.complement().unite(b.complement()));
    }
}

TEST_CASE("homogeneous decomposition") {
    auto parts = homogeneous_decomposition(vec({2, 2, INF}));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].degree == 2);
    CHECK(parts[0].part == SupportSet::of_labels({1, 2}, 3));

    parts = homogeneous_decomposition(vec({1, 2, 1}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].degree == 1);
    CHECK(parts[0].part == SupportSet::of_labels({1, 3}, 3));
    CHECK(parts[1].degree == 2);
    CHECK(parts[1].part == SupportSet::of_labels({2}, 3));

    CHECK(homogeneous_decomposition(ValVector::all_infinite(4)).empty());
}

TEST_CASE("decomposition recombines to the original vector") {
    OracleRng rng(11);
    for (int t = 0; t < 300; ++t) {
        const ValVector a = rand_vec(rng, 5);
        ValVector rebuilt = ValVector::all_infinite(5);
        for (const auto& p : homogeneous_decomposition(a))
            rebuilt = oplus(rebuilt, scale_support(p.degree, p.part));
        CHECK(rebuilt == a);
    }
}

TEST_CASE("semiring laws on random triples") {
    OracleRng rng(19);
    for (int t = 0; t < 1000; ++t) {
        const ValVector a = rand_vec(rng, 4), b = rand_vec(rng, 4),
                        c = rand_vec(rng, 4);
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(odot(a, b) == odot(b, a));
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        CHECK(odot(odot(a, b), c) == odot(a, odot(b, c)));
        CHECK(odot(a, oplus(b, c)) == oplus(odot(a, b), odot(a, c)));
        CHECK(oplus(a, a) == a);
        CHECK(odot(a, ValVector::zeros(4)) == a);
        CHECK(oplus(a, ValVector::all_infinite(4)) == a);
        // support homomorphisms
        CHECK(support(odot(a, b)) == support(a).intersect(support(b)));
        CHECK(support(oplus(a, b)) == support(a).unite(support(b)));
    }
}

TEST_CASE("leq characterizations agree on random pairs") {
    OracleRng rng(23);
    for (int t = 0; t < 500; ++t) {
        const ValVector a = rand_vec(rng, 4), b = rand_vec(rng, 4);
        bool product = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (!(a[i] <= b[i])) product = false;
        // leq itself asserts both characterizations agree
        CHECK(leq(a, b) == product);
    }
}

TEST_CASE("infinity is a state, not a sentinel") {
    CHECK_THROWS_AS(ExtNat::infinity().value(), Error);
    CHECK(ExtNat::infinity().plus(ExtNat(5)).is_inf());
    CHECK(ExtNat(3).min(ExtNat::infinity()) == ExtNat(3));
}
