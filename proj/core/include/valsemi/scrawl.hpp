#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valsemi/matrix.hpp"
#include "valsemi/tropical.hpp"

namespace valsemi {

/// A circuit together with an audit trail: `combo` is the row-combination
/// that realizes it and `vec` the resulting vector, whose support is exactly
/// the circuit.
struct CircuitWitness {
    SupportSet circuit;
    std::vector<Scalar> combo;
    std::vector<Scalar> vec;
};

/// Union-closed support family given by its circuits (the inclusion-minimal
/// members). Construction enforces that circuits are nonempty and pairwise
/// incomparable; the elimination axiom is checked by verify_scrawl_axioms.
class ScrawlFamily {
public:
    ScrawlFamily() : ground_(0) {}
    static ScrawlFamily from_circuits(std::size_t ground,
                                      std::vector<SupportSet> circuits);
    static ScrawlFamily from_witnesses(std::size_t ground,
                                       std::vector<CircuitWitness> circuits);

    std::size_t ground() const { return ground_; }
    std::size_t circuit_count() const { return circuits_.size(); }
    const std::vector<SupportSet>& circuits() const { return circuits_; }
    const std::vector<CircuitWitness>& witnesses() const { return witnesses_; }

    /// Union of all circuits contained in s.
    SupportSet covered_within(const SupportSet& s) const;
    /// s lies in the union-closure of the circuits.
    bool generates(const SupportSet& s) const;
    /// All members of the union-closure (exponential in circuit count; for
    /// small ground sets only).
    std::vector<SupportSet> all_scrawls() const;

private:
    std::size_t ground_;
    std::vector<SupportSet> circuits_;       // (cardinality, lex) sorted antichain
    std::vector<CircuitWitness> witnesses_;  // parallel to circuits_ when present
};

/*
 * Minimal supports of the row space W of G inside F^r.
 *
 * Subsets are swept in increasing cardinality, lexicographic within a
 * cardinality class. A subset S is a circuit iff {w in W : w_i = 0 outside S}
 * is nonzero, decided by the exact rank comparison
 *   dim = rank(G) - rank(G with the columns of S removed) > 0,
 * and no previously recorded circuit is contained in S. For every circuit a
 * witness row-combination is extracted from the kernel of the removed-column
 * block and retained.
 */
ScrawlFamily minimal_supports_of_subspace(const ExactMatrix& g,
                                          std::size_t ground_cap = 20);

struct ScrawlAxiomReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    bool exhaustive = true;
    std::string counterexample;  // empty when pass
};

/// Checks the elimination axiom over pairs of scrawls (exhaustively when the
/// closure is small, otherwise on sampled pairs up to sample_budget).
ScrawlAxiomReport verify_scrawl_axioms(const ScrawlFamily& fam,
                                       std::size_t sample_budget = 4096);

/// Map recorded by simplification: loops removed, parallel classes merged
/// onto their lexicographically least representative.
struct SimplifyMap {
    SupportSet loops;
    /// 1-based class label per non-loop ground element; 0 marks a loop.
    std::vector<int> class_of;
    /// 1-based representative (original label) per class, ascending.
    std::vector<int> representatives;
};

/// Matroid presented by r generating columns in F^n; the rank function is
/// exact column rank of the selected subset.
class RankMatroid {
public:
    /// columns: n x r matrix, one column per ground element.
    explicit RankMatroid(ExactMatrix columns);

    std::size_t ground() const { return columns_.cols(); }
    std::size_t ambient_dim() const { return columns_.rows(); }
    const ExactMatrix& columns() const { return columns_; }

    std::size_t rank(const SupportSet& s) const;
    std::size_t rank_full() const;
    bool is_simple() const;
    bool is_uniform() const;
    std::pair<RankMatroid, SimplifyMap> simplify() const;

private:
    ExactMatrix columns_;
};

}  // namespace valsemi
