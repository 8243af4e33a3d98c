#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "valsemi/arrangement.hpp"
#include "valsemi/config.hpp"
#include "valsemi/scrawl.hpp"

namespace valsemi {

/// One degree of the valuative image: the minimal supports of the evaluated
/// degree-d forms, each with a witness form realizing it.
struct DegreeLayer {
    uint64_t degree = 0;
    bool empty = true;  // no monomials of this degree, or zero image
    ScrawlFamily circuits;
    std::vector<Polynomial> witness_forms;  // parallel to circuits.circuits()
};

struct MembershipResult {
    bool member = false;
    // membership certificate
    std::vector<std::pair<uint64_t, std::vector<SupportSet>>> chosen_circuits;
    Polynomial realizer;
    // non-membership certificate
    uint64_t failing_degree = 0;
    int uncovered_label = 0;
};

struct ConductorResult {
    bool found = false;
    ValVector value;
    std::string diagnostic;          // set when not found
    std::vector<std::string> notes;  // validation outcomes
};

struct GenusResult {
    std::size_t value = 0;
    bool path_checked = false;     // exhaustive box verification ran
    bool path_independent = true;  // meaningful when path_checked
    // Saturated chains of members from 0 to c all share this length, and
    // value == |c| - chain_length; that is the path-independent invariant.
    std::size_t chain_length = 0;
    // Raw non-member counts over unit-step lattice paths vary; the extremes
    // are reported as a warning, not asserted equal.
    std::size_t lattice_min_gaps = 0;
    std::size_t lattice_max_gaps = 0;
};

struct ClassificationRow {
    uint64_t degree = 0;
    SupportSet circuit;
    ValVector value;
    bool maximal = false;
    bool irreducible = false;
    bool generator = false;
};

struct GeneratorsResult {
    enum class Status { ok, budget_exceeded };
    Status status = Status::ok;
    std::vector<ValVector> generators;
    std::vector<ClassificationRow> table;
    bool closure_verified = false;
    std::size_t closure_size = 0;
    std::string note;
};

/// Closed-form description of the gap family of the very-uniform theorem:
/// for each listed degree d, every permutation of d repeated i times and d-1
/// repeated r-i times, i in [i_min, i_max], is predicted to be a gap.
struct SymbolicGapFamily {
    std::size_t n = 0, r = 0;
    uint64_t conductor_degree = 0;  // least d with binom(d+n-1, n-1) >= r
    struct Entry {
        uint64_t degree;
        uint64_t i_min, i_max;
    };
    std::vector<Entry> entries;
    /// The family members that lie on the canonical staircase, ascending.
    std::vector<ValVector> staircase_members() const;
};

SymbolicGapFamily very_uniform_closed_form(std::size_t n, std::size_t r);

/// Computed description of the value semiring of a distinguished-type
/// arrangement: per-degree circuit layers, membership with certificates,
/// conductor, gaps, genus and element classification. Layers are cached
/// lazily; the cache is guarded so concurrent queries are safe.
class SemiringProfile {
public:
    SemiringProfile(std::shared_ptr<const ToricArrangement> arr, EngineConfig cfg);

    const ToricArrangement& arrangement() const { return *arr_; }
    const EngineConfig& config() const { return cfg_; }
    std::size_t branch_count() const { return arr_->branch_count(); }

    const DegreeLayer& layer(uint64_t d) const;
    bool contains(const ValVector& a) const;
    MembershipResult membership(const ValVector& a) const;

    const ConductorResult& conductor() const;
    /// Largest conductor coordinate; layers above it are computed only on
    /// demand.
    uint64_t stabilization_degree() const;

    std::vector<ValVector> gap_sequence() const;
    GenusResult genus() const;

    bool is_maximal(const ValVector& a) const;
    bool is_mult_irreducible(const ValVector& a) const;
    GeneratorsResult generators() const;

    /// Fault-injection hook for the oracle cross-check: overwrites the cached
    /// circuits of one layer with a corrupted family. Testing only.
    void corrupt_layer_for_testing(uint64_t d);

private:
    const DegreeLayer& layer_locked(uint64_t d) const;
    bool contains_unmemoized(const ValVector& a) const;
    ValVector tightness_witness(std::size_t branch, uint64_t degree,
                                uint64_t base) const;

    std::shared_ptr<const ToricArrangement> arr_;
    EngineConfig cfg_;
    std::vector<uint32_t> shared_weights_;

    mutable std::shared_mutex layer_mutex_;
    mutable std::map<uint64_t, DegreeLayer> layers_;

    struct VecHash {
        std::size_t operator()(const ValVector& v) const { return val_vector_hash(v); }
    };
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<ValVector, bool, VecHash> memo_;

    mutable std::mutex conductor_mutex_;
    mutable std::optional<ConductorResult> conductor_cache_;
};

}  // namespace valsemi
