#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "lci/discrete.hpp"

namespace lci {

/// Lattice valuation: explicit values per index set, in nats. Stored as a
/// plain table so synthetic (including invalid) valuations can be tested.
struct Valuation {
    std::unordered_map<IndexSet, double, IndexSet::Hash> values;

    double at(const IndexSet& s) const;
    void set(const IndexSet& s, double v) { values[s] = v; }
};

/// Shannon information of the I-margin, H(I) = sum_x p(x) log p_I(x_I).
/// Sign convention: this is the negative of the Shannon entropy; H({}) = 0.
/// Throws PositivityError when a margin vanishes on the support.
double shannon_H(const DiscreteJoint& d, const IndexSet& i);

/// H for every lattice element.
Valuation shannon_valuation(const DiscreteJoint& d, const DistributiveLattice& l);

/// Valuation identity H(I n J) + H(I u J) = H(I) + H(J) over all pairs.
bool valuation_check(const Valuation& v, const DistributiveLattice& l, double tol);

/// Running intersection property: sets[i] n sets[k] inside sets[j] for all
/// i < j < k.
bool running_intersection_check(std::span<const IndexSet> sets);

/// Simplified inclusion-exclusion for a running-intersection sequence:
/// sum_i v(I_i) minus the consecutive separators v(I_{i-1} n I_i). For a
/// valuation this equals v(union of the sets). Throws PreconditionError when
/// the running intersection property fails and DomainError on missing values.
double rota_inclusion_exclusion(const Valuation& v, std::span<const IndexSet> sets);

/// Additive decomposition of the valuation along the TDAG: each vertex
/// carries the increment of its join-irreducible over the one element it
/// covers, and each edge transports the increment of its source.
struct EdgeIncrements {
    Tdag tdag;
    std::vector<double> vertex_delta;                    // per TDAG vertex
    std::vector<std::tuple<int, int, double>> edges;     // (i, j, delta of i)
};

EdgeIncrements edge_increments(const Valuation& v, const DistributiveLattice& l);

/// Increments of `v` along a saturated chain (element index sequence);
/// the terms sum to v(last) - v(first).
std::vector<double> chain_increments(const Valuation& v, const DistributiveLattice& l,
                                     const std::vector<int>& chain);

} // namespace lci
