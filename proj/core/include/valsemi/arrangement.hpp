#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valsemi/config.hpp"
#include "valsemi/matrix.hpp"
#include "valsemi/polynomial.hpp"
#include "valsemi/tropical.hpp"

namespace valsemi {

uint64_t binomial(uint64_t n, uint64_t k);

/// Arrangement of r toric branches in affine n-space. Branch i is
/// parameterized by t -> (v_i1 t^{m_i1}, ..., v_in t^{m_in}); by convention a
/// weight is zero exactly where the matching coefficient is zero.
class ToricArrangement {
public:
    /// coeffs: r rows of n scalars; weights: matching grid of naturals.
    /// Validation enforces the zero convention, distinct-prime constraints
    /// (p > r and p > degree_cap) and grid shapes.
    ToricArrangement(std::size_t n, std::size_t r, Field field,
                     std::vector<std::vector<Scalar>> coeffs,
                     std::vector<std::vector<uint32_t>> weights,
                     uint64_t degree_cap = EngineConfig{}.degree_cap);

    /// Line arrangement helper: all weights one (zero where the coefficient
    /// vanishes).
    static ToricArrangement lines(std::vector<std::vector<Scalar>> coeffs,
                                  uint64_t degree_cap = EngineConfig{}.degree_cap);

    /// Parses the JSON input document described in the README.
    static ToricArrangement from_json_text(const std::string& text,
                                           uint64_t degree_cap = EngineConfig{}.degree_cap);
    static ToricArrangement from_json_file(const std::string& path,
                                           uint64_t degree_cap = EngineConfig{}.degree_cap);

    std::size_t ambient_dim() const { return n_; }
    std::size_t branch_count() const { return r_; }
    const Field& field() const { return field_; }
    const Scalar& coeff(std::size_t i, std::size_t j) const { return coeffs_[i][j]; }
    uint32_t weight(std::size_t i, std::size_t j) const { return weights_[i][j]; }
    const std::vector<Scalar>& branch_vector(std::size_t i) const { return coeffs_[i]; }
    std::vector<uint32_t> branch_weights(std::size_t i) const { return weights_[i]; }
    uint64_t degree_cap() const { return degree_cap_; }

    /// The r x n grid of branch coefficients as a matrix.
    ExactMatrix coefficient_grid() const;

    /// True iff the coefficient grid has rank n and branch vectors are
    /// pairwise distinct and nonzero.
    bool is_essential() const;

    /// Shared weight vector m with m_j agreeing with every branch off its
    /// zero pattern, when one exists.
    std::optional<std::vector<uint32_t>> distinguished_weights() const;
    bool is_distinguished() const { return distinguished_weights().has_value(); }
    /// Distinguished with shared weights all one.
    bool is_line_arrangement() const;

    /// Splits f by weighted degree with respect to branch i's weight row.
    std::map<uint64_t, Polynomial> graded_components(const Polynomial& f,
                                                     std::size_t branch) const;

    /// Branchwise image of f as truncated power series (degree <= t).
    TruncatedSeriesTuple branch_series(const Polynomial& f, uint64_t t) const;

    /// Branchwise order of vanishing of f, computed symbolically from the
    /// graded pieces; never sees a truncation artifact.
    ValVector valuation(const Polynomial& f) const;

    /// All exponent vectors of shared weighted degree d, in the fixed
    /// monomial order (descending powers of the highest-index variable
    /// first). Requires distinguished type. May be empty.
    std::vector<Exponent> monomial_basis(uint64_t d) const;

    /// r x |basis| matrix with entry (i, I) = v_i^I. Requires distinguished
    /// type.
    ExactMatrix evaluation_matrix(uint64_t d) const;

private:
    void validate() const;

    std::size_t n_, r_;
    Field field_;
    std::vector<std::vector<Scalar>> coeffs_;
    std::vector<std::vector<uint32_t>> weights_;
    uint64_t degree_cap_;
};

/// The r x binom(d+n-1, n-1) matrix whose row i lists all degree-d monomials
/// in the entries of row i of the grid, in the fixed monomial order.
ExactMatrix coefficient_matrix(const std::vector<std::vector<Scalar>>& grid,
                               uint64_t d);

struct VeryUniformCheck {
    bool very_uniform = false;
    uint64_t threshold_degree = 0;  // least d with binom(d+n-1, n-1) >= r
    struct DegreeRank {
        uint64_t degree;
        std::size_t rank;
        std::size_t expected;
    };
    std::vector<DegreeRank> checked;
    std::optional<uint64_t> failing_degree;
};

/// Checks rank C_e = min(r, binom(e+n-1, n-1)) for e = 1..threshold_degree.
/// Requires an essential line arrangement.
VeryUniformCheck is_very_uniform(const ToricArrangement& arr);

}  // namespace valsemi
