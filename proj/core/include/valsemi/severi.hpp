#pragma once

#include <cstdint>
#include <vector>

#include "valsemi/error.hpp"

namespace valsemi {

/// Parameters of a unisingular rational-curve locus: ambient projective
/// dimension n, branch multiplicity r, embedding dimension l of the multiple
/// point, and curve degree d (only the validity condition d > r uses it).
struct SeveriQuery {
    int64_t n = 3;
    int64_t r = 2;
    int64_t l = 2;
    int64_t d = 0;  // 0 = unspecified

    void validate() const;
    bool degree_condition_met() const { return d > r; }
};

/// (n-l)(r-l) + (r-1)n - r
int64_t codim_upper_bound(const SeveriQuery& q);

/// (n-2) g, the codimension of the closure of the g-nodal rational curves.
int64_t nodal_codim(int64_t n, int64_t g);

struct ThresholdResult {
    int64_t n = 0;
    int64_t r = 0;  // least r > 2 with the strict inequality
    int64_t bound_at_r = 0;
    int64_t nodal_at_r = 0;
};

/// Least r > 2 with (r-2)(n-2) + (r-1)n - r < (n-2) * binom(r, 2), the genus
/// being the planar value binom(r, 2).
ThresholdResult reducibility_threshold(int64_t n);

struct ThresholdScanRow {
    int64_t n;
    int64_t threshold;
    bool inequality_holds_beyond;  // strict inequality for all r in (threshold, r_max]
};

/// Threshold per n over a window, confirming the inequality stays strict for
/// all r >= threshold up to r_max.
std::vector<ThresholdScanRow> threshold_scan(int64_t n_min, int64_t n_max,
                                             int64_t r_max);

}  // namespace valsemi
