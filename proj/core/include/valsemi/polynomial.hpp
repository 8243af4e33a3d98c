#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "valsemi/scalar.hpp"

namespace valsemi {

using Exponent = std::vector<uint32_t>;

/// Multivariate polynomial with exact coefficients. Zero coefficients are
/// never stored; every exponent vector has length n.
class Polynomial {
public:
    Polynomial() : n_(0), field_(Field::rationals()) {}
    Polynomial(std::size_t n, const Field& f) : n_(n), field_(f) {}

    static Polynomial constant(std::size_t n, const Scalar& c);
    static Polynomial variable(std::size_t n, std::size_t j, const Field& f);
    static Polynomial monomial(const Exponent& e, const Scalar& c);

    std::size_t var_count() const { return n_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Scalar& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    bool operator==(const Polynomial& o) const;

    /// Evaluation at a point, with the convention 0^0 = 1.
    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Inner product of the exponent with a weight row.
    static uint64_t weighted_degree(const Exponent& e, const std::vector<uint32_t>& w);

    std::string to_string() const;

private:
    std::size_t n_;
    Field field_;
    std::map<Exponent, Scalar> terms_;
};

/// Per-branch truncated power series: strictly increasing orders with nonzero
/// coefficients, cut off above the recorded truncation degree.
struct TruncatedSeries {
    std::vector<std::pair<uint64_t, Scalar>> terms;
    uint64_t truncation = 0;
};

struct TruncatedSeriesTuple {
    std::vector<TruncatedSeries> branches;
    uint64_t truncation = 0;
};

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b,
                               const Field& f);
TruncatedSeriesTuple series_product(const TruncatedSeriesTuple& a,
                                    const TruncatedSeriesTuple& b, const Field& f);

}  // namespace valsemi
