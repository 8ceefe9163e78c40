#pragma once

#include <utility>
#include <vector>

#include "lci/indexset.hpp"

namespace lci {

/// Finite partially ordered set. Nodes carry labels; `leq[i]` is the bit-set
/// of nodes j with i <= j, `covers` is the transitive reduction. When a poset
/// is derived from a lattice, `payload[i]` holds the lattice element a node
/// stands for (empty otherwise).
struct Poset {
    GroundSet nodes;
    std::vector<IndexSet> leq;
    std::vector<std::pair<int, int>> covers;
    std::vector<IndexSet> payload;

    int size() const { return nodes.size(); }
    bool less_equal(int i, int j) const { return leq[static_cast<size_t>(i)].test(j); }

    /// Weak down-set {j : j <= i}.
    IndexSet down_set(int i) const;
    /// Weak up-set {j : j >= i}.
    IndexSet up_set(int i) const { return leq[static_cast<size_t>(i)]; }
};

/// Build a poset from an explicit relation, validating reflexivity,
/// antisymmetry and transitivity; covers are computed by transitive
/// reduction. Throws DomainError when the relation is not a partial order.
Poset poset_from_leq(GroundSet nodes, const std::vector<IndexSet>& leq);

/// Build a poset from strict relation pairs (i < j), taking the
/// reflexive-transitive closure. Throws DomainError on cycles.
Poset poset_from_pairs(GroundSet nodes, const std::vector<std::pair<int, int>>& less_than);

/// All order ideals (downward-closed node sets) of q, including {} and the
/// full node set, in canonical order.
std::vector<IndexSet> order_ideals(const Poset& q);

/// Independent recursive ideal counter (branch on a maximal element);
/// kept as a cross-check oracle for order_ideals.
std::uint64_t count_order_ideals_recursive(const Poset& q);

/// Transitive reduction of a DAG given as leq rows (strict part is used).
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<IndexSet>& leq);

} // namespace lci
