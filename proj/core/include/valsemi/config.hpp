#pragma once

#include <cstddef>
#include <cstdint>

namespace valsemi {

/// Engine-wide budgets. All computations in this library terminate at small
/// degree; the caps turn a runaway query into a clean budget error instead of
/// an unbounded search.
struct EngineConfig {
    uint64_t degree_cap = 64;         // largest weighted degree any query may touch
    std::size_t ground_cap = 20;      // largest ground set for exhaustive subset sweeps
    uint64_t seed = 0;                // recorded in every report
    std::size_t membership_memo_cap = 1u << 17;
    std::size_t closure_budget = 250000;          // max elements in a generation closure
    std::size_t classification_budget = 2000000;  // max enumeration steps per maximal/irreducible query
    std::size_t probe_subset_cap = 4096;          // mixed-infinity conductor probes
};

/// Budgets for the brute-force oracle module.
struct OracleConfig {
    uint64_t max_degree = 16;
    std::size_t max_ground = 6;
    uint64_t seed = 0;
    std::size_t sample_count = 200;
    std::size_t box_budget = 200000;
    uint64_t tiny_prime = 5;
};

}  // namespace valsemi
