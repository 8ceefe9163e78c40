#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lci/indexset.hpp"
#include "lci/poset.hpp"

namespace lci {

/// Default safety cap on lattice size; closure can be exponential in the
/// number of generators.
constexpr std::size_t kDefaultLatticeCap = 1'000'000;

/// A family of index sets closed under union and intersection, with the
/// empty set adjoined as the unique minimum. Elements are kept in canonical
/// (cardinality, lexicographic) order; meet and join are set intersection
/// and union, looked up in the element table.
class DistributiveLattice {
public:
    const GroundSet& ground() const { return ground_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const IndexSet& element(int i) const { return elems_.at(static_cast<size_t>(i)); }
    const std::vector<IndexSet>& elements() const { return elems_; }

    std::optional<int> index_of(const IndexSet& s) const;
    int require_index(const IndexSet& s) const;

    bool leq(int i, int j) const { return elems_[static_cast<size_t>(i)].subset_of(elems_[static_cast<size_t>(j)]); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    int meet(int i, int j) const;
    int join(int i, int j) const;

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<int> upper_covers(int i) const;
    std::vector<int> lower_covers(int i) const;

    int bottom_index() const { return 0; }
    int top_index() const { return size() - 1; }

    friend DistributiveLattice lattice_from_elements(const GroundSet& ground,
                                                     std::vector<IndexSet> elements);

private:
    GroundSet ground_;
    std::vector<IndexSet> elems_;
    std::unordered_map<IndexSet, int, IndexSet::Hash> index_;
    std::vector<std::pair<int, int>> covers_;
};

/// Smallest family containing the generators and {} that is closed under
/// union and intersection (worklist fixpoint over pairs). Throws DomainError
/// when a generator is not a subset of the ground set and ResourceError when
/// the closure exceeds `cap` elements.
DistributiveLattice lattice_from_generators(const GroundSet& ground,
                                            std::span<const IndexSet> gens,
                                            std::size_t cap = kDefaultLatticeCap);

/// Wrap an explicit element family; validates union/intersection closedness
/// and the presence of the empty set (DomainError otherwise).
DistributiveLattice lattice_from_elements(const GroundSet& ground, std::vector<IndexSet> elements);

/// Poset of join-irreducible elements (the elements covering exactly one
/// element; the empty set is excluded by convention). Nodes are labeled by
/// the increment a join-irreducible introduces; payload holds the lattice
/// element itself.
Poset join_irreducibles(const DistributiveLattice& l);

/// Increment set (newly introduced ground labels) per node of
/// join_irreducibles(l), in node order.
std::vector<IndexSet> join_irreducible_increments(const DistributiveLattice& l);

/// Birkhoff correspondence: true iff l is order-isomorphic to the order
/// ideals of its join-irreducible poset via I -> {join-irreducibles <= I}.
bool birkhoff_check(const DistributiveLattice& l);

/// All saturated chains between two lattice members (sequences of element
/// indices stepping through cover relations). `from` must be contained in
/// `to`; both must be members.
std::vector<std::vector<int>> saturated_chains(const DistributiveLattice& l, const IndexSet& from,
                                               const IndexSet& to,
                                               std::size_t cap = kDefaultLatticeCap);

/// The canonical saturated chain from bottom to `to`: lexicographically
/// least cover at each step.
std::vector<int> canonical_chain(const DistributiveLattice& l, const IndexSet& to);

} // namespace lci
