#include "valsemi/oracle.hpp"

#include <algorithm>
#include <map>

namespace valsemi {

uint64_t OracleRng::next() {
    // splitmix64 step; stable across platforms
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t OracleRng::below(uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
}

int64_t OracleRng::range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
}

namespace {

// Plain fractioned Gaussian elimination, kept separate from the engine's
// fraction-free routine on purpose.
std::size_t plain_rank(std::vector<std::vector<Scalar>> a) {
    if (a.empty() || a.front().empty()) return 0;
    const std::size_t nr = a.size(), nc = a.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        const Scalar inv = a[row][col].inverse();
        for (std::size_t j = col; j < nc; ++j) a[row][j] *= inv;
        for (std::size_t i = row + 1; i < nr; ++i) {
            if (a[i][col].is_zero()) continue;
            const Scalar factor = a[i][col];
            for (std::size_t j = col; j < nc; ++j) a[i][j] -= factor * a[row][j];
        }
        ++row;
    }
    return row;
}

// evaluation grid: row i lists v_i^I over the weighted degree-d monomials
std::vector<std::vector<Scalar>> evaluation_grid(const ToricArrangement& arr,
                                                 uint64_t d) {
    const std::vector<Exponent> basis = arr.monomial_basis(d);
    std::vector<std::vector<Scalar>> grid;
    for (std::size_t i = 0; i < arr.branch_count(); ++i) {
        std::vector<Scalar> row;
        for (const auto& e : basis) {
            Scalar val = Scalar::one(arr.field());
            for (std::size_t j = 0; j < arr.ambient_dim(); ++j) {
                if (e[j] == 0) continue;
                val *= arr.coeff(i, j).pow(e[j]);
            }
            row.push_back(val);
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

void check_budgets(const ToricArrangement& arr, const OracleConfig& cfg) {
    if (arr.branch_count() > cfg.max_ground)
        fail_budget("oracle budget: r = " + std::to_string(arr.branch_count()) +
                    " exceeds max ground " + std::to_string(cfg.max_ground));
}

}  // namespace

std::vector<SupportSet> achievable_supports_exhaustive(const ToricArrangement& arr,
                                                       uint64_t d,
                                                       const OracleConfig& cfg) {
    check_budgets(arr, cfg);
    if (d > cfg.max_degree)
        fail_budget("oracle budget: degree " + std::to_string(d) +
                    " exceeds max degree " + std::to_string(cfg.max_degree));
    const std::size_t r = arr.branch_count();
    const auto grid = evaluation_grid(arr, d);
    const std::size_t ncols = grid.empty() ? 0 : grid.front().size();
    std::vector<SupportSet> out;
    if (ncols == 0) return out;

    // dim{f : ev f vanishes outside T}, for every subset T
    const uint32_t full = (uint32_t{1} << r) - 1u;
    std::vector<std::size_t> dim(full + 1, 0);
    for (uint32_t t = 0; t <= full; ++t) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < r; ++i)
            if (!((t >> i) & 1u)) rows.push_back(grid[i]);
        dim[t] = ncols - plain_rank(std::move(rows));
    }

    // S achieved exactly iff the constrained space is strictly bigger than
    // every coordinate-killed subspace; valid because the field has more than
    // r elements.
    for (uint32_t s = 1; s <= full; ++s) {
        if (dim[s] == 0) continue;
        bool exact = true;
        for (std::size_t i = 0; i < r; ++i) {
            if (!((s >> i) & 1u)) continue;
            if (dim[s & ~(uint32_t{1} << i)] >= dim[s]) {
                exact = false;
                break;
            }
        }
        if (exact) out.push_back(SupportSet(s, r));
    }
    std::sort(out.begin(), out.end(), SupportSet::card_lex_less);
    return out;
}

bool membership_exhaustive(const ToricArrangement& arr, const ValVector& a,
                           const OracleConfig& cfg) {
    AchievableCache cache;
    return membership_exhaustive(arr, a, cfg, cache);
}

bool membership_exhaustive(const ToricArrangement& arr, const ValVector& a,
                           const OracleConfig& cfg, AchievableCache& cache) {
    check_budgets(arr, cfg);
    if (a.size() != arr.branch_count()) fail_validation("vector length mismatch");
    for (const auto& [d, part] : homogeneous_decomposition(a)) {
        auto it = cache.find(d);
        if (it == cache.end())
            it = cache.emplace(d, achievable_supports_exhaustive(arr, d, cfg)).first;
        // B_d mask
        uint32_t b_bits = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_inf() && a[i].value() <= d) b_bits |= uint32_t{1} << i;
        const SupportSet b_set(b_bits, a.size());
        bool ok = false;
        for (const auto& t : it->second) {
            if (part.subset_of(t) && t.subset_of(b_set)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::optional<Polynomial> random_realization(const ToricArrangement& arr,
                                             const ValVector& a,
                                             std::size_t trials, OracleRng& rng) {
    if (a.size() != arr.branch_count()) fail_validation("vector length mismatch");
    const Field f = arr.field();
    const auto parts = homogeneous_decomposition(a);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Polynomial cand(arr.ambient_dim(), f);
        for (const auto& [d, part] : parts) {
            for (const auto& e : arr.monomial_basis(d)) {
                const int64_t c = rng.range(-3, 3);
                if (c == 0) continue;
                cand.add_term(e, Scalar::integer(c, f));
            }
        }
        if (arr.valuation(cand) == a) return cand;
    }
    return std::nullopt;
}

std::vector<ValVector> tiny_field_enumeration(const ToricArrangement& arr,
                                              uint64_t degree_bound,
                                              const OracleConfig& cfg) {
    check_budgets(arr, cfg);
    const Field f = arr.field();
    if (f.is_rational())
        fail_validation("tiny-field enumeration requires a prime field");
    const uint64_t p = f.characteristic();
    if (p > cfg.tiny_prime)
        fail_budget("oracle budget: prime " + std::to_string(p) +
                    " exceeds tiny prime bound");

    // all monomials of weighted degree <= bound
    std::vector<Exponent> monomials;
    for (uint64_t d = 0; d <= degree_bound; ++d)
        for (const auto& e : arr.monomial_basis(d)) monomials.push_back(e);

    uint64_t total = 1;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        if (total > cfg.box_budget)
            fail_budget("oracle budget: tiny-field enumeration too large");
        total *= p;
    }
    if (total > cfg.box_budget)
        fail_budget("oracle budget: tiny-field enumeration too large");

    const std::size_t r = arr.branch_count();
    std::set<ValVector, bool (*)(const ValVector&, const ValVector&)> seen(
        &val_vector_less);

    std::vector<uint64_t> coeff(monomials.size(), 0);
    for (uint64_t tuple = 0; tuple < total; ++tuple) {
        // valuation straight from the definition, truncated at the bound
        std::vector<ExtNat> ord(r, ExtNat::infinity());
        for (std::size_t i = 0; i < r; ++i) {
            const auto weights = arr.branch_weights(i);
            std::map<uint64_t, Scalar> piece_values;
            for (std::size_t k = 0; k < monomials.size(); ++k) {
                if (coeff[k] == 0) continue;
                const uint64_t s = Polynomial::weighted_degree(monomials[k], weights);
                if (s > degree_bound) continue;
                Scalar val = Scalar::residue(coeff[k], f);
                for (std::size_t j = 0; j < arr.ambient_dim(); ++j) {
                    if (monomials[k][j] == 0) continue;
                    val *= arr.coeff(i, j).pow(monomials[k][j]);
                }
                auto it = piece_values.find(s);
                if (it == piece_values.end())
                    piece_values.emplace(s, val);
                else
                    it->second += val;
            }
            for (const auto& [s, v] : piece_values) {
                if (!v.is_zero()) {
                    ord[i] = ExtNat(s);
                    break;
                }
            }
        }
        seen.insert(ValVector(std::move(ord)));

        // next coefficient tuple
        std::size_t k = 0;
        while (k < coeff.size()) {
            if (++coeff[k] < p) break;
            coeff[k] = 0;
            ++k;
        }
    }
    return std::vector<ValVector>(seen.begin(), seen.end());
}

std::vector<ValVector> non_members_in_box(const ToricArrangement& arr,
                                          const ValVector& c,
                                          const OracleConfig& cfg) {
    check_budgets(arr, cfg);
    const std::size_t r = arr.branch_count();
    if (c.size() != r) fail_validation("vector length mismatch");
    uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (c[i].is_inf()) fail_validation("box corner must be finite");
        total *= c[i].value() + 1;
        if (total > cfg.box_budget) fail_budget("oracle budget: box too large");
    }

    std::vector<ValVector> out;
    AchievableCache cache;
    std::vector<uint64_t> idx(r, 0);
    for (uint64_t flat = 0; flat < total; ++flat) {
        std::vector<ExtNat> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(idx[i]);
        ValVector a(std::move(v));
        if (!membership_exhaustive(arr, a, cfg, cache)) out.push_back(a);
        std::size_t k = 0;
        while (k < r) {
            if (++idx[k] <= c[k].value()) break;
            idx[k] = 0;
            ++k;
        }
    }
    std::sort(out.begin(), out.end(), &val_vector_less);
    return out;
}

}  // namespace valsemi
