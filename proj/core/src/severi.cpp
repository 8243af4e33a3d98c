#include "valsemi/severi.hpp"

namespace valsemi {

namespace {
int64_t binom2(int64_t r) { return r * (r - 1) / 2; }
}  // namespace

void SeveriQuery::validate() const {
    if (n < 2) fail_validation("severi query requires n >= 2");
    if (r < 2) fail_validation("severi query requires r >= 2");
    if (l < 2) fail_validation("severi query requires l >= 2");
    if (l > n) fail_validation("severi query requires l <= n");
    if (l > r) fail_validation("severi query requires l <= r");
}

int64_t codim_upper_bound(const SeveriQuery& q) {
    q.validate();
    return (q.n - q.l) * (q.r - q.l) + (q.r - 1) * q.n - q.r;
}

int64_t nodal_codim(int64_t n, int64_t g) {
    if (n < 2) fail_validation("nodal codimension requires n >= 2");
    if (g < 0) fail_validation("nodal codimension requires g >= 0");
    return (n - 2) * g;
}

ThresholdResult reducibility_threshold(int64_t n) {
    if (n < 3) fail_validation("reducibility threshold requires n >= 3");
    for (int64_t r = 3;; ++r) {
        const int64_t bound = (r - 2) * (n - 2) + (r - 1) * n - r;
        const int64_t nodal = (n - 2) * binom2(r);
        if (bound < nodal) return {n, r, bound, nodal};
        if (r > 1000000) fail_internal("threshold scan runaway");
    }
}

std::vector<ThresholdScanRow> threshold_scan(int64_t n_min, int64_t n_max,
                                             int64_t r_max) {
    std::vector<ThresholdScanRow> rows;
    for (int64_t n = n_min; n <= n_max; ++n) {
        const ThresholdResult t = reducibility_threshold(n);
        bool holds = true;
        for (int64_t r = t.r; r <= r_max; ++r) {
            const int64_t bound = (r - 2) * (n - 2) + (r - 1) * n - r;
            if (!(bound < (n - 2) * binom2(r))) {
                holds = false;
                break;
            }
        }
        rows.push_back({n, t.r, holds});
    }
    return rows;
}

}  // namespace valsemi
