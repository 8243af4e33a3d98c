#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valsemi/error.hpp"

namespace valsemi {

/// Extended natural: a value in N together with an explicit infinity state.
/// Infinity is a real state, never a sentinel integer, so min/plus can never
/// be corrupted by overflow of a magic value.
class ExtNat {
public:
    ExtNat() : v_(0), inf_(false) {}
    explicit ExtNat(uint64_t v) : v_(v), inf_(false) {}
    static ExtNat infinity() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    uint64_t value() const {
        if (inf_) fail_internal("value() on infinite ExtNat");
        return v_;
    }

    ExtNat min(const ExtNat& o) const {
        if (inf_) return o;
        if (o.inf_) return *this;
        return ExtNat(v_ < o.v_ ? v_ : o.v_);
    }
    ExtNat plus(const ExtNat& o) const {
        if (inf_ || o.inf_) return infinity();
        if (v_ > UINT64_MAX - o.v_) fail_internal("ExtNat addition overflow");
        return ExtNat(v_ + o.v_);
    }

    bool operator==(const ExtNat& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const ExtNat& o) const { return !(*this == o); }
    bool operator<=(const ExtNat& o) const {
        if (o.inf_) return true;
        if (inf_) return false;
        return v_ <= o.v_;
    }
    bool operator<(const ExtNat& o) const { return *this <= o && *this != o; }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    uint64_t v_;
    bool inf_;
};

/// Subset of the branch labels [r] = {1, ..., r}, stored as a bit mask.
/// Bit i-1 encodes label i; r is capped at 20 by the engine configuration.
class SupportSet {
public:
    SupportSet() : bits_(0), ground_(0) {}
    SupportSet(uint32_t bits, std::size_t ground);
    static SupportSet empty(std::size_t ground) { return SupportSet(0, ground); }
    static SupportSet full(std::size_t ground);
    /// Labels are 1-based.
    static SupportSet of_labels(const std::vector<int>& labels, std::size_t ground);

    std::size_t ground() const { return ground_; }
    uint32_t bits() const { return bits_; }
    bool contains(int label) const { return (bits_ >> (label - 1)) & 1u; }
    bool is_empty() const { return bits_ == 0; }
    std::size_t size() const;

    SupportSet unite(const SupportSet& o) const;
    SupportSet intersect(const SupportSet& o) const;
    SupportSet complement() const;
    SupportSet without(int label) const;
    bool subset_of(const SupportSet& o) const;

    bool operator==(const SupportSet& o) const {
        return bits_ == o.bits_ && ground_ == o.ground_;
    }
    bool operator!=(const SupportSet& o) const { return !(*this == o); }

    /// Sorted 1-based label list.
    std::vector<int> labels() const;
    std::string to_string() const;

    /// Order by (cardinality, lexicographic label list); used everywhere a
    /// deterministic circuit order is needed.
    static bool card_lex_less(const SupportSet& a, const SupportSet& b);

private:
    uint32_t bits_;
    std::size_t ground_;
};

/// Element of the product semiring of r extended naturals with
/// coordinatewise min as addition and coordinatewise plus as multiplication.
class ValVector {
public:
    ValVector() = default;
    explicit ValVector(std::vector<ExtNat> coords) : c_(std::move(coords)) {}
    static ValVector zeros(std::size_t r) {
        return ValVector(std::vector<ExtNat>(r, ExtNat(0)));
    }
    static ValVector all_infinite(std::size_t r) {
        return ValVector(std::vector<ExtNat>(r, ExtNat::infinity()));
    }

    std::size_t size() const { return c_.size(); }
    const ExtNat& operator[](std::size_t i) const { return c_[i]; }
    ExtNat& operator[](std::size_t i) { return c_[i]; }

    bool operator==(const ValVector& o) const { return c_ == o.c_; }
    bool operator!=(const ValVector& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<ExtNat> c_;
};

ValVector oplus(const ValVector& a, const ValVector& b);
ValVector odot(const ValVector& a, const ValVector& b);
/// Idempotent order: a <= b iff a oplus b = a. Coincides with the product
/// order; both characterizations are asserted to agree.
bool leq(const ValVector& a, const ValVector& b);
SupportSet support(const ValVector& a);
/// d * S: the homogeneous vector with value d on S and infinity elsewhere.
ValVector scale_support(uint64_t d, const SupportSet& s);

struct HomogeneousPart {
    uint64_t degree;
    SupportSet part;
};
/// The distinct finite values of a, each with the coordinate set attaining it,
/// in ascending degree order. Recombining the parts reproduces a.
std::vector<HomogeneousPart> homogeneous_decomposition(const ValVector& a);

/// Total order (finite before infinity, then by value); for ordered containers.
bool val_vector_less(const ValVector& a, const ValVector& b);
std::size_t val_vector_hash(const ValVector& a);

}  // namespace valsemi
