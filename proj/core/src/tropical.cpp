#include "valsemi/tropical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace valsemi {

SupportSet::SupportSet(uint32_t bits, std::size_t ground) : bits_(bits), ground_(ground) {
    if (ground > 20) fail_budget("ground set too large for exhaustive enumeration");
    if (ground < 32 && (bits >> ground) != 0)
        fail_internal("support bits outside ground set");
}

SupportSet SupportSet::full(std::size_t ground) {
    return SupportSet(ground == 0 ? 0u : (uint32_t{1} << ground) - 1u, ground);
}

SupportSet SupportSet::of_labels(const std::vector<int>& labels, std::size_t ground) {
    uint32_t bits = 0;
    for (int l : labels) {
        if (l < 1 || static_cast<std::size_t>(l) > ground)
            fail_validation("label outside ground set");
        bits |= uint32_t{1} << (l - 1);
    }
    return SupportSet(bits, ground);
}

std::size_t SupportSet::size() const { return std::popcount(bits_); }

SupportSet SupportSet::unite(const SupportSet& o) const {
    if (ground_ != o.ground_) fail_validation("ground set mismatch");
    return SupportSet(bits_ | o.bits_, ground_);
}

SupportSet SupportSet::intersect(const SupportSet& o) const {
    if (ground_ != o.ground_) fail_validation("ground set mismatch");
    return SupportSet(bits_ & o.bits_, ground_);
}

SupportSet SupportSet::complement() const {
    return SupportSet(full(ground_).bits() & ~bits_, ground_);
}

SupportSet SupportSet::without(int label) const {
    return SupportSet(bits_ & ~(uint32_t{1} << (label - 1)), ground_);
}

bool SupportSet::subset_of(const SupportSet& o) const {
    if (ground_ != o.ground_) fail_validation("ground set mismatch");
    return (bits_ & ~o.bits_) == 0;
}

std::vector<int> SupportSet::labels() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ground_; ++i)
        if ((bits_ >> i) & 1u) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string SupportSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
        if (!first) s += ",";
        s += std::to_string(l);
        first = false;
    }
    return s + "}";
}

bool SupportSet::card_lex_less(const SupportSet& a, const SupportSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.labels() < b.labels();
}

std::string ValVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].to_string();
    }
    return s + ")";
}

namespace {
void check_len(const ValVector& a, const ValVector& b) {
    if (a.size() != b.size()) fail_validation("vector length mismatch");
}
}  // namespace

ValVector oplus(const ValVector& a, const ValVector& b) {
    check_len(a, b);
    std::vector<ExtNat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].min(b[i]);
    return ValVector(std::move(c));
}

ValVector odot(const ValVector& a, const ValVector& b) {
    check_len(a, b);
    std::vector<ExtNat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].plus(b[i]);
    return ValVector(std::move(c));
}

bool leq(const ValVector& a, const ValVector& b) {
    check_len(a, b);
    const bool by_oplus = oplus(a, b) == a;
    bool by_product = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] <= b[i])) {
            by_product = false;
            break;
        }
    }
    if (by_oplus != by_product)
        fail_internal("order characterizations disagree");
    return by_oplus;
}

SupportSet support(const ValVector& a) {
    uint32_t bits = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_inf()) bits |= uint32_t{1} << i;
    return SupportSet(bits, a.size());
}

ValVector scale_support(uint64_t d, const SupportSet& s) {
    std::vector<ExtNat> c(s.ground(), ExtNat::infinity());
    for (int l : s.labels()) c[l - 1] = ExtNat(d);
    return ValVector(std::move(c));
}

std::vector<HomogeneousPart> homogeneous_decomposition(const ValVector& a) {
    std::map<uint64_t, uint32_t> parts;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_inf()) parts[a[i].value()] |= uint32_t{1} << i;
    std::vector<HomogeneousPart> out;
    for (const auto& [d, bits] : parts)
        out.push_back({d, SupportSet(bits, a.size())});
    return out;
}

bool val_vector_less(const ValVector& a, const ValVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const ExtNat &x = a[i], &y = b[i];
        if (x == y) continue;
        if (x.is_inf()) return false;
        if (y.is_inf()) return true;
        return x.value() < y.value();
    }
    return false;
}

std::size_t val_vector_hash(const ValVector& a) {
    // FNV-1a over the coordinates
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
        mix(a[i].is_inf() ? ~uint64_t{0} : a[i].value() + 1);
    return static_cast<std::size_t>(h);
}

}  // namespace valsemi
