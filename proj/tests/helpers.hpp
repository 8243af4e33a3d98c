#pragma once

#include <memory>
#include <vector>

#include "valsemi/arrangement.hpp"
#include "valsemi/oracle.hpp"
#include "valsemi/semiring.hpp"

namespace testutil {

using namespace valsemi;

inline Scalar q(long long num, long long den = 1) {
    return Scalar::rational(BigRational(BigInt(num), BigInt(den)));
}

inline Scalar rand_scalar(OracleRng& rng, const Field& f) {
    if (f.is_rational()) {
        const long long num = rng.range(-9, 9);
        const long long den = rng.range(1, 6);
        return Scalar::rational(BigRational(BigInt(num), BigInt(den)));
    }
    return Scalar::residue(rng.below(f.characteristic()), f);
}

inline Scalar rand_nonzero(OracleRng& rng, const Field& f) {
    while (true) {
        Scalar s = rand_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

inline ExactMatrix rand_matrix(OracleRng& rng, std::size_t rows, std::size_t cols,
                               const Field& f) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rand_scalar(rng, f));
    return m;
}

// INF as a sentinel only inside test literals
inline constexpr long long INF = -1;

inline ValVector vec(std::initializer_list<long long> entries) {
    std::vector<ExtNat> c;
    for (long long e : entries)
        c.push_back(e < 0 ? ExtNat::infinity() : ExtNat(static_cast<uint64_t>(e)));
    return ValVector(std::move(c));
}

inline std::shared_ptr<const ToricArrangement> axes(std::size_t n) {
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n, q(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = q(1);
    return std::make_shared<const ToricArrangement>(ToricArrangement::lines(rows));
}

inline std::shared_ptr<const ToricArrangement> planar(
    const std::vector<long long>& slopes) {
    // (1, 0), (0, 1), then (1, s) for the remaining slopes
    std::vector<std::vector<Scalar>> rows;
    rows.push_back({q(1), q(0)});
    rows.push_back({q(0), q(1)});
    for (long long s : slopes) rows.push_back({q(1), q(s)});
    return std::make_shared<const ToricArrangement>(ToricArrangement::lines(rows));
}

inline std::shared_ptr<const ToricArrangement> planar3() { return planar({1}); }

// n=3, r=4 with all four vectors in linearly general position
inline std::shared_ptr<const ToricArrangement> variation_uniform() {
    return std::make_shared<const ToricArrangement>(ToricArrangement::lines(
        {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)},
         {q(1), q(1), q(1)}}));
}

// n=3, r=4 with the coplanar triple {2,3,4}
inline std::shared_ptr<const ToricArrangement> variation_coplanar() {
    return std::make_shared<const ToricArrangement>(ToricArrangement::lines(
        {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)},
         {q(0), q(1), q(1)}}));
}

// weighted distinguished arrangement with m = (1, 2)
inline std::shared_ptr<const ToricArrangement> weighted12() {
    return std::make_shared<const ToricArrangement>(ToricArrangement(
        2, 2, Field::rationals(), {{q(1), q(1)}, {q(1), q(-1)}},
        {{1, 2}, {1, 2}}));
}

inline Polynomial rand_poly(OracleRng& rng, const ToricArrangement& arr,
                            uint64_t max_degree, std::size_t max_terms) {
    Polynomial p(arr.ambient_dim(), arr.field());
    const std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e(arr.ambient_dim());
        for (std::size_t j = 0; j < arr.ambient_dim(); ++j)
            e[j] = static_cast<uint32_t>(rng.below(max_degree + 1));
        p.add_term(e, rand_scalar(rng, arr.field()));
    }
    return p;
}

}  // namespace testutil
