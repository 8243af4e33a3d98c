#include "valsemi/scrawl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace valsemi {

namespace {

// All cardinality-k subsets of [r] in lexicographic label order.
void for_each_combination(std::size_t r, std::size_t k,
                          const std::function<void(const SupportSet&)>& fn) {
    if (k > r) return;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i) + 1;
    while (true) {
        fn(SupportSet::of_labels(idx, r));
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == static_cast<int>(r - k + i)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_antichain(const std::vector<SupportSet>& circuits) {
    for (const auto& c : circuits)
        if (c.is_empty()) fail_validation("scrawl family with an empty circuit");
    for (std::size_t i = 0; i < circuits.size(); ++i)
        for (std::size_t j = 0; j < circuits.size(); ++j) {
            if (i == j) continue;
            if (circuits[i].subset_of(circuits[j]))
                fail_validation("circuits must be pairwise incomparable: " +
                                circuits[i].to_string() + " inside " +
                                circuits[j].to_string());
        }
}

}  // namespace

ScrawlFamily ScrawlFamily::from_circuits(std::size_t ground,
                                         std::vector<SupportSet> circuits) {
    std::sort(circuits.begin(), circuits.end(), SupportSet::card_lex_less);
    check_antichain(circuits);
    ScrawlFamily f;
    f.ground_ = ground;
    f.circuits_ = std::move(circuits);
    return f;
}

ScrawlFamily ScrawlFamily::from_witnesses(std::size_t ground,
                                          std::vector<CircuitWitness> circuits) {
    std::sort(circuits.begin(), circuits.end(),
              [](const CircuitWitness& a, const CircuitWitness& b) {
                  return SupportSet::card_lex_less(a.circuit, b.circuit);
              });
    std::vector<SupportSet> supports;
    supports.reserve(circuits.size());
    for (const auto& w : circuits) supports.push_back(w.circuit);
    check_antichain(supports);
    ScrawlFamily f;
    f.ground_ = ground;
    f.circuits_ = std::move(supports);
    f.witnesses_ = std::move(circuits);
    return f;
}

SupportSet ScrawlFamily::covered_within(const SupportSet& s) const {
    SupportSet u = SupportSet::empty(ground_);
    for (const auto& c : circuits_)
        if (c.subset_of(s)) u = u.unite(c);
    return u;
}

bool ScrawlFamily::generates(const SupportSet& s) const {
    return !s.is_empty() && covered_within(s) == s;
}

std::vector<SupportSet> ScrawlFamily::all_scrawls() const {
    std::set<uint32_t> seen;
    std::vector<SupportSet> work = circuits_;
    for (const auto& c : circuits_) seen.insert(c.bits());
    for (std::size_t head = 0; head < work.size(); ++head) {
        const SupportSet cur = work[head];
        for (const auto& c : circuits_) {
            SupportSet u = cur.unite(c);
            if (seen.insert(u.bits()).second) work.push_back(u);
        }
    }
    std::sort(work.begin(), work.end(), SupportSet::card_lex_less);
    return work;
}

ScrawlFamily minimal_supports_of_subspace(const ExactMatrix& g,
                                          std::size_t ground_cap) {
    const std::size_t r = g.cols();
    if (r > ground_cap)
        fail_budget("ground set too large for exhaustive enumeration");

    const std::size_t full_rank = rank(g);
    std::vector<CircuitWitness> found;
    if (full_rank == 0)
        return ScrawlFamily::from_witnesses(r, std::move(found));

    for (std::size_t card = 1; card <= r; ++card) {
        for_each_combination(r, card, [&](const SupportSet& s) {
            for (const auto& w : found)
                if (w.circuit.subset_of(s)) return;
            std::vector<std::size_t> removed;
            for (int l : s.complement().labels())
                removed.push_back(static_cast<std::size_t>(l - 1));
            const ExactMatrix outside = g.select_columns(removed);
            if (rank(outside) >= full_rank) return;

            // Witness: a row combination vanishing on the removed columns but
            // not on all of G. Some kernel basis vector must work, else the
            // dimension count above was wrong.
            CircuitWitness cw;
            cw.circuit = s;
            for (const auto& x : kernel_basis(outside.transpose())) {
                std::vector<Scalar> vec = g.apply_left(x);
                bool nonzero = false;
                for (const auto& v : vec)
                    if (!v.is_zero()) {
                        nonzero = true;
                        break;
                    }
                if (!nonzero) continue;
                cw.combo = x;
                cw.vec = std::move(vec);
                break;
            }
            if (cw.vec.empty()) fail_internal("no witness for recorded circuit");
            uint32_t bits = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (!cw.vec[i].is_zero()) bits |= uint32_t{1} << i;
            if (SupportSet(bits, r) != s)
                fail_internal("witness support differs from circuit");
            found.push_back(std::move(cw));
        });
    }
    return ScrawlFamily::from_witnesses(r, std::move(found));
}

ScrawlAxiomReport verify_scrawl_axioms(const ScrawlFamily& fam,
                                       std::size_t sample_budget) {
    ScrawlAxiomReport rep;
    std::vector<SupportSet> scrawls = fam.all_scrawls();
    const std::size_t total_pairs =
        scrawls.size() * (scrawls.size() > 0 ? scrawls.size() - 1 : 0) / 2;
    rep.exhaustive = total_pairs <= sample_budget;

    uint64_t stride = 1;
    if (!rep.exhaustive && total_pairs > 0)
        stride = (total_pairs + sample_budget - 1) / sample_budget;

    uint64_t pair_index = 0;
    for (std::size_t i = 0; i < scrawls.size(); ++i) {
        for (std::size_t j = i + 1; j < scrawls.size(); ++j, ++pair_index) {
            if (pair_index % stride != 0) continue;
            const SupportSet &s1 = scrawls[i], &s2 = scrawls[j];
            const SupportSet common = s1.intersect(s2);
            for (int e : common.labels()) {
                const SupportSet rest = s1.unite(s2).without(e);
                bool ok = false;
                for (const auto& c : fam.circuits())
                    if (c.subset_of(rest)) {
                        ok = true;
                        break;
                    }
                if (!ok) {
                    rep.pass = false;
                    rep.counterexample = "S1=" + s1.to_string() +
                                         " S2=" + s2.to_string() +
                                         " e=" + std::to_string(e);
                    return rep;
                }
            }
            ++rep.pairs_checked;
        }
    }
    return rep;
}

RankMatroid::RankMatroid(ExactMatrix columns) : columns_(std::move(columns)) {}

std::size_t RankMatroid::rank(const SupportSet& s) const {
    if (s.ground() != ground()) fail_validation("ground set mismatch");
    if (s.is_empty()) return 0;
    std::vector<std::size_t> cols;
    for (int l : s.labels()) cols.push_back(static_cast<std::size_t>(l - 1));
    return valsemi::rank(columns_.select_columns(cols));
}

std::size_t RankMatroid::rank_full() const {
    return valsemi::rank(columns_);
}

bool RankMatroid::is_simple() const {
    const std::size_t r = ground();
    for (std::size_t i = 1; i <= r; ++i)
        if (rank(SupportSet::of_labels({static_cast<int>(i)}, r)) != 1) return false;
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j)
            if (rank(SupportSet::of_labels({static_cast<int>(i), static_cast<int>(j)},
                                           r)) != 2)
                return false;
    return true;
}

bool RankMatroid::is_uniform() const {
    // Every subset of size <= n independent; it suffices that every subset of
    // size exactly min(n, r) is, since subsets of independent sets are
    // independent.
    const std::size_t r = ground();
    const std::size_t k = std::min(ambient_dim(), r);
    bool uniform = true;
    for_each_combination(r, k, [&](const SupportSet& s) {
        if (!uniform) return;
        if (rank(s) != k) uniform = false;
    });
    return uniform;
}

std::pair<RankMatroid, SimplifyMap> RankMatroid::simplify() const {
    const std::size_t r = ground();
    SimplifyMap map;
    map.class_of.assign(r, 0);
    uint32_t loop_bits = 0;

    std::vector<int> nonloops;
    for (std::size_t i = 1; i <= r; ++i) {
        if (rank(SupportSet::of_labels({static_cast<int>(i)}, r)) == 0)
            loop_bits |= uint32_t{1} << (i - 1);
        else
            nonloops.push_back(static_cast<int>(i));
    }
    map.loops = SupportSet(loop_bits, r);

    // Parallel classes: union-find by pairwise rank-1 tests, representative is
    // the least label.
    for (int i : nonloops) {
        if (map.class_of[i - 1] != 0) continue;
        map.representatives.push_back(i);
        const int cls = static_cast<int>(map.representatives.size());
        map.class_of[i - 1] = cls;
        for (int j : nonloops) {
            if (j <= i || map.class_of[j - 1] != 0) continue;
            if (rank(SupportSet::of_labels({i, j}, r)) == 1)
                map.class_of[j - 1] = cls;
        }
    }

    std::vector<std::size_t> rep_cols;
    for (int rep : map.representatives)
        rep_cols.push_back(static_cast<std::size_t>(rep - 1));
    return {RankMatroid(columns_.select_columns(rep_cols)), map};
}

}  // namespace valsemi
