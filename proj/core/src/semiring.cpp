#include "valsemi/semiring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace valsemi {

namespace {

// Iterates the product of option counts; fn returns false to abort early.
void odometer(const std::vector<std::size_t>& sizes,
              const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    for (std::size_t s : sizes)
        if (s == 0) return;
    std::vector<std::size_t> idx(sizes.size(), 0);
    while (true) {
        if (!fn(idx)) return;
        std::size_t k = 0;
        while (k < sizes.size()) {
            if (++idx[k] < sizes[k]) break;
            idx[k] = 0;
            ++k;
        }
        if (k == sizes.size()) return;
    }
}

uint64_t checked_product(const std::vector<std::size_t>& sizes, uint64_t cap) {
    uint64_t p = 1;
    for (std::size_t s : sizes) {
        if (s == 0) return 0;
        if (p > cap / s) return cap + 1;
        p *= s;
    }
    return p;
}

}  // namespace

std::vector<ValVector> SymbolicGapFamily::staircase_members() const {
    std::vector<ValVector> out;
    for (const auto& e : entries) {
        for (uint64_t i = e.i_min; i <= e.i_max; ++i) {
            std::vector<ExtNat> c(r);
            for (std::size_t k = 0; k < r; ++k)
                c[k] = ExtNat(k < i ? e.degree : e.degree - 1);
            out.push_back(ValVector(std::move(c)));
        }
    }
    return out;
}

SymbolicGapFamily very_uniform_closed_form(std::size_t n, std::size_t r) {
    if (n < 2 || r < 2) fail_validation("closed form requires n, r >= 2");
    SymbolicGapFamily fam;
    fam.n = n;
    fam.r = r;
    uint64_t d = 1;
    while (binomial(d + n - 1, n - 1) < r) ++d;
    fam.conductor_degree = d;
    for (uint64_t e = 1; binomial(e + n - 1, n - 1) < r; ++e)
        fam.entries.push_back({e, e, static_cast<uint64_t>(r) - 1});
    return fam;
}

SemiringProfile::SemiringProfile(std::shared_ptr<const ToricArrangement> arr,
                                 EngineConfig cfg)
    : arr_(std::move(arr)), cfg_(cfg) {
    auto m = arr_->distinguished_weights();
    if (!m) fail_validation("semiring pipeline requires distinguished type");
    shared_weights_ = *m;
    if (arr_->branch_count() > cfg_.ground_cap)
        fail_budget("ground set too large for exhaustive enumeration");
}

const DegreeLayer& SemiringProfile::layer(uint64_t d) const {
    if (d > cfg_.degree_cap)
        fail_budget("layer degree " + std::to_string(d) +
                    " exceeds the degree cap " + std::to_string(cfg_.degree_cap));
    {
        std::shared_lock lock(layer_mutex_);
        auto it = layers_.find(d);
        if (it != layers_.end()) return it->second;
    }
    std::unique_lock lock(layer_mutex_);
    return layer_locked(d);
}

const DegreeLayer& SemiringProfile::layer_locked(uint64_t d) const {
    auto it = layers_.find(d);
    if (it != layers_.end()) return it->second;

    DegreeLayer lay;
    lay.degree = d;
    const std::vector<Exponent> basis = arr_->monomial_basis(d);
    const std::size_t r = arr_->branch_count();
    if (basis.empty()) {
        lay.empty = true;
        lay.circuits = ScrawlFamily::from_circuits(r, {});
    } else {
        const ExactMatrix ev = arr_->evaluation_matrix(d);
        lay.circuits = minimal_supports_of_subspace(ev.transpose(), cfg_.ground_cap);
        lay.empty = lay.circuits.circuit_count() == 0;
        for (const auto& w : lay.circuits.witnesses()) {
            Polynomial form(arr_->ambient_dim(), arr_->field());
            for (std::size_t k = 0; k < basis.size(); ++k)
                form.add_term(basis[k], w.combo[k]);
            // audit: the witness form's valuation is exactly d on the circuit
            if (arr_->valuation(form) != scale_support(d, w.circuit))
                fail_internal("witness form valuation mismatch at degree " +
                              std::to_string(d));
            lay.witness_forms.push_back(std::move(form));
        }
    }
    return layers_.emplace(d, std::move(lay)).first->second;
}

bool SemiringProfile::contains_unmemoized(const ValVector& a) const {
    for (const auto& [d, part] : homogeneous_decomposition(a)) {
        if (d > cfg_.degree_cap)
            fail_budget("membership query needs degree " + std::to_string(d) +
                        " above the degree cap");
        // circuits inside B_d = {i : a_i <= d} must cover {i : a_i = d}
        uint32_t b_bits = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_inf() && a[i].value() <= d) b_bits |= uint32_t{1} << i;
        const SupportSet b_set(b_bits, a.size());
        const SupportSet covered = layer(d).circuits.covered_within(b_set);
        if (!part.subset_of(covered)) return false;
    }
    return true;
}

bool SemiringProfile::contains(const ValVector& a) const {
    if (a.size() != arr_->branch_count())
        fail_validation("vector length mismatch");
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
    }
    const bool verdict = contains_unmemoized(a);
    {
        std::lock_guard lock(memo_mutex_);
        if (memo_.size() < cfg_.membership_memo_cap) memo_.emplace(a, verdict);
    }
    return verdict;
}

MembershipResult SemiringProfile::membership(const ValVector& a) const {
    if (a.size() != arr_->branch_count())
        fail_validation("vector length mismatch");
    MembershipResult res;
    const std::size_t r = arr_->branch_count();
    const Field f = arr_->field();
    Polynomial realizer(arr_->ambient_dim(), f);

    for (const auto& [d, part] : homogeneous_decomposition(a)) {
        if (d > cfg_.degree_cap)
            fail_budget("membership query needs degree " + std::to_string(d) +
                        " above the degree cap");
        uint32_t b_bits = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_inf() && a[i].value() <= d) b_bits |= uint32_t{1} << i;
        const SupportSet b_set(b_bits, r);
        const DegreeLayer& lay = layer(d);

        // deterministic cover: walk circuits in (cardinality, lex) order and
        // keep those inside B_d that cover something new
        SupportSet covered = SupportSet::empty(r);
        std::vector<std::size_t> picked;
        const auto& circuits = lay.circuits.circuits();
        for (std::size_t k = 0; k < circuits.size(); ++k) {
            if (!circuits[k].subset_of(b_set)) continue;
            if (part.intersect(circuits[k]).subset_of(covered)) continue;
            covered = covered.unite(circuits[k]);
            picked.push_back(k);
            if (part.subset_of(covered)) break;
        }
        if (!part.subset_of(covered)) {
            res.member = false;
            res.failing_degree = d;
            for (int l : part.labels())
                if (!covered.contains(l)) {
                    res.uncovered_label = l;
                    break;
                }
            return res;
        }

        // combine witness forms without cancelling any coordinate that must
        // be hit at this degree
        std::vector<Scalar> acc(r, Scalar::zero(f));
        Polynomial piece(arr_->ambient_dim(), f);
        for (std::size_t k : picked) {
            const auto& wit = lay.circuits.witnesses()[k];
            const uint64_t lambda_cap =
                f.is_rational() ? static_cast<uint64_t>(r) + 2 : f.characteristic();
            bool placed = false;
            for (uint64_t l = 1; l < std::max<uint64_t>(lambda_cap, 2); ++l) {
                const Scalar lambda = Scalar::integer(static_cast<long long>(l), f);
                bool ok = true;
                for (int lab : part.labels()) {
                    const std::size_t i = static_cast<std::size_t>(lab - 1);
                    if (wit.vec[i].is_zero()) continue;
                    if ((acc[i] + lambda * wit.vec[i]).is_zero()) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                for (std::size_t i = 0; i < r; ++i)
                    acc[i] += lambda * wit.vec[i];
                piece = piece + lay.witness_forms[k].scaled(lambda);
                placed = true;
                break;
            }
            if (!placed) fail_internal("no cancellation-free combination found");
        }
        std::vector<SupportSet> sel;
        for (std::size_t k : picked) sel.push_back(circuits[k]);
        res.chosen_circuits.emplace_back(d, std::move(sel));
        realizer = realizer + piece;
    }

    res.member = true;
    res.realizer = realizer;
    if (arr_->valuation(realizer) != a)
        fail_internal("membership certificate fails valuation check");
    return res;
}

const ConductorResult& SemiringProfile::conductor() const {
    std::lock_guard lock(conductor_mutex_);
    if (conductor_cache_) return *conductor_cache_;

    ConductorResult out;
    const std::size_t r = arr_->branch_count();
    const uint64_t cap = cfg_.degree_cap;

    uint32_t maxstep = 0;
    for (uint32_t w : shared_weights_) maxstep = std::max(maxstep, w);

    // per-branch degree steps taken from the nonzero coefficient pattern
    for (std::size_t i = 0; i < r; ++i) {
        uint64_t g = 0;
        for (std::size_t j = 0; j < arr_->ambient_dim(); ++j)
            if (!arr_->coeff(i, j).is_zero()) g = std::gcd(g, uint64_t{shared_weights_[j]});
        if (g == 0) {
            out.found = false;
            out.diagnostic = "branch " + std::to_string(i + 1) +
                             " has a zero coefficient vector";
            conductor_cache_ = std::move(out);
            return *conductor_cache_;
        }
        if (g > 1) {
            out.found = false;
            out.diagnostic = "branch " + std::to_string(i + 1) +
                             " only meets degrees divisible by " + std::to_string(g) +
                             "; the semiring has no conductor";
            conductor_cache_ = std::move(out);
            return *conductor_cache_;
        }
    }

    // Candidate coordinate i: least D with {i} a circuit in every layer of
    // [D, D+maxstep]. Such a window propagates upward: a witness form for {i}
    // times a variable with nonzero coefficient on branch i realizes {i}
    // again one weight step higher.
    auto has_singleton = [&](std::size_t i, uint64_t d) {
        for (const auto& cc : layer(d).circuits.circuits())
            if (cc.size() == 1 && cc.contains(static_cast<int>(i) + 1)) return true;
        return false;
    };

    std::vector<uint64_t> d_vec(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        std::optional<uint64_t> run_start;
        std::optional<uint64_t> window;
        for (uint64_t d = 0; d <= cap; ++d) {
            if (!has_singleton(i, d)) {
                run_start.reset();
                continue;
            }
            if (!run_start) run_start = d;
            if (d - *run_start >= maxstep) {
                window = *run_start;
                break;
            }
        }
        if (!window) {
            out.found = false;
            out.diagnostic = "no persistent singleton layer for branch " +
                             std::to_string(i + 1) + " within the degree cap";
            conductor_cache_ = std::move(out);
            return *conductor_cache_;
        }
        d_vec[i] = *window;
    }

    std::vector<ExtNat> cvec(r);
    for (std::size_t i = 0; i < r; ++i) cvec[i] = ExtNat(d_vec[i]);
    ValVector c(std::move(cvec));
    const uint64_t d_max = *std::max_element(d_vec.begin(), d_vec.end());

    // Validation probes. The window criterion already implies every a >= c is
    // a member, so a failure here signals an inconsistency; the fallback is a
    // bounded outward search.
    auto validate = [&](const ValVector& cand) -> std::optional<std::string> {
        std::vector<std::size_t> sizes(r, maxstep + 1);
        if (checked_product(sizes, cfg_.probe_subset_cap) <= cfg_.probe_subset_cap) {
            std::optional<std::string> bad;
            odometer(sizes, [&](const std::vector<std::size_t>& idx) {
                std::vector<ExtNat> v(r);
                for (std::size_t i = 0; i < r; ++i)
                    v[i] = ExtNat(cand[i].value() + idx[i]);
                ValVector probe(std::move(v));
                if (!contains(probe)) {
                    bad = "box probe " + probe.to_string() + " is not a member";
                    return false;
                }
                return true;
            });
            if (bad) return bad;
        }
        if (r <= 12) {
            for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << r); ++mask) {
                std::vector<ExtNat> v(r);
                for (std::size_t i = 0; i < r; ++i)
                    v[i] = ((mask >> i) & 1u) ? ExtNat::infinity()
                                              : ExtNat(cand[i].value());
                ValVector probe(std::move(v));
                if (!contains(probe))
                    return "mixed-infinity probe " + probe.to_string() +
                           " is not a member";
            }
        }
        return std::nullopt;
    };

    ValVector cand = c;
    bool outward = false;
    for (int round = 0;; ++round) {
        auto bad = validate(cand);
        if (!bad) break;
        out.notes.push_back(*bad);
        if (round >= 3) {
            out.found = false;
            out.diagnostic = "no conductor validated within the degree cap";
            conductor_cache_ = std::move(out);
            return *conductor_cache_;
        }
        outward = true;
        std::vector<ExtNat> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(cand[i].value() + 1);
        cand = ValVector(std::move(v));
    }
    if (outward)
        out.notes.push_back(
            "conductor obtained by outward search; minimality not certified");

    // Tightness: for each coordinate with c_i > 0, exhibit a non-member
    // dominating c - e_i. The witness pins coordinate i at a degree where
    // {i} is not a circuit and spreads the rest over large distinct values.
    if (!outward) {
        for (std::size_t i = 0; i < r; ++i) {
            if (d_vec[i] == 0) continue;
            std::optional<uint64_t> gap_degree;
            for (uint64_t d = d_vec[i] - 1; d <= d_vec[i] - 1 + maxstep; ++d) {
                if (!has_singleton(i, d)) {
                    gap_degree = d;
                    break;
                }
            }
            if (!gap_degree) {
                out.notes.push_back("no tightness witness for coordinate " +
                                    std::to_string(i + 1));
                continue;
            }
            const uint64_t base = std::max(d_max + maxstep, *gap_degree) + 1;
            if (base + r > cap) {
                out.notes.push_back("tightness unverified for coordinate " +
                                    std::to_string(i + 1) + " (degree cap)");
                continue;
            }
            std::vector<ExtNat> v(r);
            for (std::size_t j = 0; j < r; ++j)
                v[j] = j == i ? ExtNat(*gap_degree) : ExtNat(base + j);
            const ValVector witness(std::move(v));
            if (contains(witness))
                fail_internal("tightness witness unexpectedly a member: " +
                              witness.to_string());
        }
    }

    out.found = true;
    out.value = cand;
    conductor_cache_ = std::move(out);
    return *conductor_cache_;
}

uint64_t SemiringProfile::stabilization_degree() const {
    const ConductorResult& c = conductor();
    if (!c.found) fail_validation("stabilization degree requires a conductor");
    uint64_t d = 0;
    for (std::size_t i = 0; i < c.value.size(); ++i)
        d = std::max(d, c.value[i].value());
    return d;
}

std::vector<ValVector> SemiringProfile::gap_sequence() const {
    const ConductorResult& cr = conductor();
    if (!cr.found)
        fail_validation("gap sequence requires a conductor: " + cr.diagnostic);
    const ValVector& c = cr.value;
    const std::size_t r = c.size();

    // balanced staircase: per level raise every coordinate still below c by
    // one, in index order, recording each intermediate point
    std::vector<ValVector> gaps;
    ValVector cur = ValVector::zeros(r);
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (!(cur[i] < c[i])) continue;
            cur[i] = ExtNat(cur[i].value() + 1);
            moved = true;
            if (!contains(cur)) gaps.push_back(cur);
        }
    }
    return gaps;
}

GenusResult SemiringProfile::genus() const {
    GenusResult out;
    const std::vector<ValVector> gaps = gap_sequence();
    out.value = gaps.size();

    const ValVector& c = conductor().value;
    const std::size_t r = c.size();
    uint64_t cmax = 0, csum = 0;
    for (std::size_t i = 0; i < r; ++i) {
        cmax = std::max(cmax, c[i].value());
        csum += c[i].value();
    }
    if (cmax == 0 || r * cmax > 18) return out;
    out.path_checked = true;

    // Sweep the box [0, c] once: members and the per-point min/max
    // non-member counts over unit-step monotone paths.
    std::vector<std::size_t> dims(r);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        dims[i] = static_cast<std::size_t>(c[i].value()) + 1;
        total *= dims[i];
    }
    std::vector<bool> member(total, false);
    std::vector<std::size_t> ming(total, 0), maxg(total, 0);
    std::vector<ValVector> members;
    std::vector<std::size_t> member_flat;
    std::vector<std::size_t> idx(r, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<ExtNat> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(idx[i]);
        ValVector a(std::move(v));
        member[flat] = contains(a);
        if (member[flat]) {
            members.push_back(a);
            member_flat.push_back(flat);
        }
        if (flat > 0) {
            const std::size_t miss = member[flat] ? 0 : 1;
            std::size_t best = SIZE_MAX, worst = 0;
            std::size_t stride = 1;
            for (std::size_t i = 0; i < r; ++i) {
                if (idx[i] > 0) {
                    best = std::min(best, ming[flat - stride]);
                    worst = std::max(worst, maxg[flat - stride]);
                }
                stride *= dims[i];
            }
            ming[flat] = best + miss;
            maxg[flat] = worst + miss;
        }
        std::size_t k = 0;
        while (k < r) {
            if (++idx[k] < dims[k]) break;
            idx[k] = 0;
            ++k;
        }
    }
    out.lattice_min_gaps = ming[total - 1];
    out.lattice_max_gaps = maxg[total - 1];

    /*
     * Path-independent invariant: every saturated chain of members from 0 to
     * c has the same length L, and the genus equals |c| - L. Raw non-member
     * counts over lattice paths are path dependent (each coordinate-axis ray
     * below c misses the semiring entirely), so they are reported but not
     * asserted equal.
     */
    const std::size_t m = members.size();
    std::vector<std::size_t> minl(m, 0), maxl(m, 0);
    auto strictly_less = [&](const ValVector& x, const ValVector& y) {
        bool strict = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (!(x[i] <= y[i])) return false;
            if (x[i] != y[i]) strict = true;
        }
        return strict;
    };
    bool chains_agree = true;
    for (std::size_t a = 1; a < m; ++a) {
        std::size_t best = SIZE_MAX, worst = 0;
        for (std::size_t b = 0; b < a; ++b) {
            if (!strictly_less(members[b], members[a])) continue;
            bool saturated = true;
            for (std::size_t x = 0; x < m; ++x) {
                if (x == a || x == b) continue;
                if (strictly_less(members[b], members[x]) &&
                    strictly_less(members[x], members[a])) {
                    saturated = false;
                    break;
                }
            }
            if (!saturated) continue;
            best = std::min(best, minl[b] + 1);
            worst = std::max(worst, maxl[b] + 1);
        }
        if (best == SIZE_MAX) {
            chains_agree = false;
            break;
        }
        minl[a] = best;
        maxl[a] = worst;
        if (best != worst) {
            chains_agree = false;
            break;
        }
    }
    out.chain_length = m > 0 ? minl[m - 1] : 0;
    out.path_independent = chains_agree &&
                           out.value == csum - out.chain_length;
    return out;
}

bool SemiringProfile::is_maximal(const ValVector& a) const {
    const ConductorResult& cr = conductor();
    if (!cr.found) fail_validation("classification requires conductor");
    if (!contains(a)) fail_validation("maximality is defined for members only");
    const SupportSet supp = support(a);
    if (supp.is_empty())
        fail_validation("maximality is not applicable to the all-infinite vector");
    const std::size_t r = a.size();
    const ValVector& c = cr.value;

    /*
     * Maximality in the fiber sense of the absolute-maximum equivalence: a
     * strictly dominating member must keep some finite coordinate of a fixed
     * to disqualify a. Without that constraint no member would ever be
     * maximal (a is always below its own square), which would contradict the
     * minimal-support maxima corollary; equivalently, F_J(a) is probed for
     * nonempty proper J only.
     */

    const auto parts = homogeneous_decomposition(a);
    std::optional<bool> fast;
    if (parts.size() == 1) {
        // homogeneous a = d*T: a dominating pattern exists iff some circuit
        // of layer d sits strictly inside T
        const uint64_t d = parts.front().degree;
        const SupportSet t = parts.front().part;
        bool has_inner = false;
        for (const auto& cir : layer(d).circuits.circuits())
            if (cir != t && cir.subset_of(t)) {
                has_inner = true;
                break;
            }
        fast = !has_inner;
    }

    // bounded order-predicate search: b >= a, b != a, agreeing with a at
    // some finite coordinate
    std::vector<std::vector<ExtNat>> options(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i].is_inf()) {
            options[i] = {ExtNat::infinity()};
            continue;
        }
        const uint64_t hi = std::max(a[i].value(), c[i].value()) + 1;
        for (uint64_t v = a[i].value(); v <= hi; ++v) options[i].push_back(ExtNat(v));
        options[i].push_back(ExtNat::infinity());
    }
    std::vector<std::size_t> sizes(r);
    for (std::size_t i = 0; i < r; ++i) sizes[i] = options[i].size();

    std::optional<bool> searched;
    if (checked_product(sizes, cfg_.classification_budget) <=
        cfg_.classification_budget) {
        bool witness_found = false;
        odometer(sizes, [&](const std::vector<std::size_t>& idx) {
            std::vector<ExtNat> v(r);
            bool agrees = false, differs = false;
            for (std::size_t i = 0; i < r; ++i) {
                v[i] = options[i][idx[i]];
                if (!a[i].is_inf()) {
                    if (v[i] == a[i])
                        agrees = true;
                    else
                        differs = true;
                }
            }
            if (!agrees || !differs) return true;
            if (contains(ValVector(std::move(v)))) {
                witness_found = true;
                return false;
            }
            return true;
        });
        searched = !witness_found;
    }

    // F_J probe over nonempty proper subsets J of Supp(a)
    std::optional<bool> fj;
    const std::vector<int> supp_labels = supp.labels();
    if (supp_labels.size() == 1) {
        fj = true;  // no nonempty proper subset exists
    } else if ((uint64_t{1} << supp_labels.size()) <= cfg_.classification_budget) {
        bool witness_found = false;
        const std::size_t k = supp_labels.size();
        for (uint32_t jmask = 1; jmask + 1 < (uint32_t{1} << k) && !witness_found;
             ++jmask) {
            std::vector<std::vector<ExtNat>> opt(r);
            for (std::size_t i = 0; i < r; ++i) {
                if (a[i].is_inf()) {
                    opt[i] = {ExtNat::infinity()};
                    continue;
                }
                std::size_t pos = 0;
                while (supp_labels[pos] != static_cast<int>(i) + 1) ++pos;
                if ((jmask >> pos) & 1u) {
                    opt[i] = {a[i]};
                } else {
                    const uint64_t hi = std::max(a[i].value(), c[i].value()) + 1;
                    for (uint64_t v = a[i].value() + 1; v <= hi; ++v)
                        opt[i].push_back(ExtNat(v));
                    opt[i].push_back(ExtNat::infinity());
                }
            }
            std::vector<std::size_t> sz(r);
            for (std::size_t i = 0; i < r; ++i) sz[i] = opt[i].size();
            if (checked_product(sz, cfg_.classification_budget) >
                cfg_.classification_budget)
                continue;
            odometer(sz, [&](const std::vector<std::size_t>& idx) {
                std::vector<ExtNat> v(r);
                for (std::size_t i = 0; i < r; ++i) v[i] = opt[i][idx[i]];
                if (contains(ValVector(std::move(v)))) {
                    witness_found = true;
                    return false;
                }
                return true;
            });
        }
        fj = !witness_found;
    }

    std::optional<bool> verdict = fast ? fast : (searched ? searched : fj);
    if (!verdict) fail_budget("maximality query exceeds the classification budget");
    if (fast && searched && *fast != *searched)
        fail_internal("maximality predicates disagree (fast vs order) at " +
                      a.to_string());
    if (fast && fj && *fast != *fj)
        fail_internal("maximality predicates disagree (fast vs F_J) at " +
                      a.to_string());
    if (searched && fj && *searched != *fj)
        fail_internal("maximality predicates disagree (order vs F_J) at " +
                      a.to_string());
    return *verdict;
}

bool SemiringProfile::is_mult_irreducible(const ValVector& a) const {
    const ConductorResult& cr = conductor();
    if (!cr.found) fail_validation("classification requires conductor");
    if (!contains(a)) fail_validation("irreducibility is defined for members only");
    if (support(a).is_empty())
        fail_validation("irreducibility requires a finite coordinate");
    const std::size_t r = a.size();
    const ValVector& c = cr.value;

    // Factor entries at the infinite coordinates can always be pulled down by
    // min-ing with a member of the absorbing region, so searching values up
    // to c_i + 1 there is exhaustive.
    std::vector<std::vector<std::pair<ExtNat, ExtNat>>> options(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto& opt = options[i];
        if (!a[i].is_inf()) {
            for (uint64_t t = 0; t <= a[i].value(); ++t)
                opt.emplace_back(ExtNat(t), ExtNat(a[i].value() - t));
        } else {
            const uint64_t hi = c[i].value() + 1;
            opt.emplace_back(ExtNat::infinity(), ExtNat::infinity());
            for (uint64_t t = 0; t <= hi; ++t) {
                opt.emplace_back(ExtNat::infinity(), ExtNat(t));
                opt.emplace_back(ExtNat(t), ExtNat::infinity());
            }
        }
    }
    std::vector<std::size_t> sizes(r);
    for (std::size_t i = 0; i < r; ++i) sizes[i] = options[i].size();
    if (checked_product(sizes, cfg_.classification_budget) >
        cfg_.classification_budget)
        fail_budget("irreducibility query exceeds the classification budget");

    bool reducible = false;
    odometer(sizes, [&](const std::vector<std::size_t>& idx) {
        std::vector<ExtNat> bv(r), cv(r);
        for (std::size_t i = 0; i < r; ++i) {
            bv[i] = options[i][idx[i]].first;
            cv[i] = options[i][idx[i]].second;
        }
        ValVector b(std::move(bv)), cc(std::move(cv));
        if (b == a || cc == a) return true;
        if (contains(b) && contains(cc)) {
            reducible = true;
            return false;
        }
        return true;
    });
    return !reducible;
}

GeneratorsResult SemiringProfile::generators() const {
    GeneratorsResult out;
    const ConductorResult& cr = conductor();
    if (!cr.found) fail_validation("generators require a conductor");
    const ValVector& c = cr.value;
    const std::size_t r = arr_->branch_count();
    const uint64_t dstar = stabilization_degree();

    std::vector<std::pair<uint64_t, SupportSet>> candidates;
    for (uint64_t d = 1; d <= dstar; ++d)
        for (const auto& cir : layer(d).circuits.circuits())
            candidates.emplace_back(d, cir);

    // estimate irreducibility work before starting
    uint64_t estimated = 0;
    for (const auto& [d, cir] : candidates) {
        uint64_t one = 1;
        for (std::size_t i = 0; i < r; ++i) {
            const uint64_t options = cir.contains(static_cast<int>(i) + 1)
                                         ? d + 1
                                         : 2 * (c[i].value() + 2) + 1;
            if (one > cfg_.classification_budget / options) {
                one = cfg_.classification_budget + 1;
                break;
            }
            one *= options;
        }
        estimated += std::min<uint64_t>(one, cfg_.classification_budget + 1);
        if (estimated > cfg_.classification_budget) break;
    }
    if (estimated > cfg_.classification_budget) {
        out.status = GeneratorsResult::Status::budget_exceeded;
        out.note = "classification budget exceeded; generator table skipped";
        return out;
    }

    for (const auto& [d, cir] : candidates) {
        ClassificationRow row;
        row.degree = d;
        row.circuit = cir;
        row.value = scale_support(d, cir);
        row.maximal = is_maximal(row.value);
        row.irreducible = is_mult_irreducible(row.value);
        row.generator = row.maximal && row.irreducible;
        if (row.generator) out.generators.push_back(row.value);
        out.table.push_back(std::move(row));
    }

    // Generation check: the bounded closure of the generators reproduces the
    // members of [0, c] exactly. Entries saturate at c_i + 1; saturation
    // commutes with min and plus and leaves box members untouched.
    std::vector<uint64_t> sat(r);
    for (std::size_t i = 0; i < r; ++i) sat[i] = c[i].value() + 1;
    auto saturate = [&](const ValVector& v) {
        std::vector<ExtNat> w(r);
        for (std::size_t i = 0; i < r; ++i)
            w[i] = v[i].is_inf() ? ExtNat::infinity()
                                 : ExtNat(std::min(v[i].value(), sat[i]));
        return ValVector(std::move(w));
    };

    std::set<ValVector, bool (*)(const ValVector&, const ValVector&)> closure(
        &val_vector_less);
    std::vector<ValVector> work;
    auto push = [&](const ValVector& v) {
        if (closure.insert(v).second) work.push_back(v);
    };
    push(ValVector::zeros(r));
    push(ValVector::all_infinite(r));
    for (const auto& g : out.generators) push(saturate(g));

    for (std::size_t head = 0; head < work.size(); ++head) {
        if (closure.size() > cfg_.closure_budget) {
            out.status = GeneratorsResult::Status::budget_exceeded;
            out.note = "closure budget exceeded during generation check";
            return out;
        }
        const ValVector cur = work[head];
        for (std::size_t k = 0; k <= head; ++k) {
            push(oplus(cur, work[k]));
            push(saturate(odot(cur, work[k])));
        }
    }
    out.closure_size = closure.size();

    std::vector<std::size_t> dims(r);
    uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        dims[i] = static_cast<std::size_t>(c[i].value()) + 1;
        total *= dims[i];
        if (total > cfg_.closure_budget) {
            out.status = GeneratorsResult::Status::budget_exceeded;
            out.note = "box budget exceeded during generation check";
            return out;
        }
    }
    odometer(dims, [&](const std::vector<std::size_t>& idx) {
        std::vector<ExtNat> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(idx[i]);
        ValVector a(std::move(v));
        const bool member = contains(a);
        const bool generated = closure.count(a) > 0;
        if (member != generated)
            fail_internal("generation verification failed at " + a.to_string() +
                          (member ? " (member not generated)"
                                  : " (generated non-member)"));
        return true;
    });
    out.closure_verified = true;
    return out;
}

void SemiringProfile::corrupt_layer_for_testing(uint64_t d) {
    std::unique_lock lock(layer_mutex_);
    layer_locked(d);
    DegreeLayer& lay = layers_.at(d);
    std::vector<SupportSet> circuits = lay.circuits.circuits();
    if (circuits.size() > 1) {
        circuits.pop_back();
    } else {
        circuits.clear();
        circuits.push_back(SupportSet::full(arr_->branch_count()));
    }
    lay.circuits = ScrawlFamily::from_circuits(arr_->branch_count(), circuits);
    lay.witness_forms.clear();
    std::lock_guard memo_lock(memo_mutex_);
    memo_.clear();
}

}  // namespace valsemi
