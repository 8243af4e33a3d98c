#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "valsemi/arrangement.hpp"
#include "valsemi/config.hpp"
#include "valsemi/polynomial.hpp"
#include "valsemi/tropical.hpp"

namespace valsemi {

/*
 * Independent brute-force verifiers. Everything here decides by direct
 * definition: achievable supports by dimension comparisons over all
 * sub-subsets, membership by searching achievable-support choices per degree,
 * and tiny-field enumeration by evaluating every polynomial. The linear
 * algebra is a private plain fractioned elimination, deliberately not the
 * engine's fraction-free routine.
 */

/// Deterministic generator (raw mt19937_64 output, explicit range mapping,
/// so identical seeds reproduce byte-identical reports everywhere).
class OracleRng {
public:
    explicit OracleRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    uint64_t below(uint64_t bound);  // uniform-ish in [0, bound)
    int64_t range(int64_t lo, int64_t hi);

private:
    uint64_t state_;
};

/// The family of supports achievable exactly by some degree-d form, decided
/// for every subset of [r] by exact rank comparisons.
std::vector<SupportSet> achievable_supports_exhaustive(const ToricArrangement& arr,
                                                       uint64_t d,
                                                       const OracleConfig& cfg);

/// Achievable-support families keyed by degree, for sweeping many membership
/// queries against one arrangement.
using AchievableCache = std::map<uint64_t, std::vector<SupportSet>>;

/// Membership by brute force: for every distinct finite value d of a there
/// must be an achievable degree-d support T with {i : a_i = d} inside T and T
/// inside {i : a_i <= d}; this is exactly the reconstruction
/// a_i = min{d : i in T_d}.
bool membership_exhaustive(const ToricArrangement& arr, const ValVector& a,
                           const OracleConfig& cfg);
bool membership_exhaustive(const ToricArrangement& arr, const ValVector& a,
                           const OracleConfig& cfg, AchievableCache& cache);

/// Random-coefficient search for a polynomial with the given valuation.
/// Success proves membership; failure proves nothing.
std::optional<Polynomial> random_realization(const ToricArrangement& arr,
                                             const ValVector& a,
                                             std::size_t trials, OracleRng& rng);

/// Every valuation achieved by a polynomial of weighted degree <= bound over
/// a tiny prime field, entries above the bound masked to infinity.
std::vector<ValVector> tiny_field_enumeration(const ToricArrangement& arr,
                                              uint64_t degree_bound,
                                              const OracleConfig& cfg);

/// All finite non-members below the box corner c.
std::vector<ValVector> non_members_in_box(const ToricArrangement& arr,
                                          const ValVector& c,
                                          const OracleConfig& cfg);

}  // namespace valsemi
