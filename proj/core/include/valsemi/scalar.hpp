#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "valsemi/error.hpp"

namespace valsemi {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient field of an arrangement: the rationals, or F_p for a prime p.
/// A characteristic of 0 encodes the rationals.
class Field {
public:
    Field() : p_(0) {}
    static Field rationals() { return Field(); }
    static Field prime(uint64_t p);

    bool is_rational() const { return p_ == 0; }
    uint64_t characteristic() const { return p_; }
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }
    std::string describe() const;

private:
    uint64_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues are kept in [0, p). No floating point
/// enters anywhere.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar integer(long long v, const Field& f = Field::rationals());
    static Scalar rational(const BigRational& v);
    /// Parses "n" or "n/d" (optionally signed). Rational fields only.
    static Scalar parse_rational(const std::string& text);
    static Scalar residue(uint64_t v, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(uint64_t e) const;
    Scalar inverse() const;

    const BigRational& rat() const { return rat_; }
    uint64_t residue_value() const { return res_; }
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    BigRational rat_;  // rational mode
    uint64_t res_;     // prime-field mode
};

}  // namespace valsemi
