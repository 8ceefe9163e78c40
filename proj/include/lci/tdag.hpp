#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lci/lattice.hpp"

namespace lci {

/// Raw directed graph (labels + edge index pairs), used as the unvalidated
/// import form before Tdag construction.
struct Digraph {
    GroundSet vertices;
    std::vector<std::pair<int, int>> edges;
};

/// Transitive directed acyclic graph. Transitivity, acyclicity and absence
/// of self-loops are validated on every construction.
class Tdag {
public:
    Tdag(GroundSet vertices, const std::vector<std::pair<int, int>>& edges);

    /// Build from a raw digraph; when `close` is set the transitive closure
    /// is taken first, otherwise non-transitive input is rejected.
    static Tdag from_digraph(const Digraph& g, bool close = false);

    const GroundSet& vertices() const { return vertices_; }
    int size() const { return vertices_.size(); }
    bool has_edge(int i, int j) const { return out_.at(static_cast<size_t>(i)).test(j); }

    /// Edge list as index pairs, sorted.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    /// Weak ancestral set {j : j -> i} plus i itself.
    IndexSet ancestral_set(int i) const;

    /// Equality as labeled graphs: same label set, same labeled edges
    /// (vertex storage order does not matter).
    bool same_graph(const Tdag& other) const;

private:
    GroundSet vertices_;
    std::vector<IndexSet> out_;
};

/// TDAG of a lattice: one vertex per join-irreducible (labeled by the ground
/// labels it introduces), an edge i -> j whenever the corresponding
/// join-irreducibles are nested I(i) strictly inside I(j).
Tdag tdag_of_lattice(const DistributiveLattice& l);

/// Lattice of all ancestral (order-ideal) vertex sets of a TDAG.
DistributiveLattice lattice_of_tdag(const Tdag& g, std::size_t cap = kDefaultLatticeCap);

/// Weak ancestral set of a labeled vertex. Throws DomainError for unknown labels.
IndexSet ancestors(const Tdag& g, std::string_view label);

/// Same vertices, all edges reversed.
Tdag reverse_tdag(const Tdag& g);

/// Lattice of complements {top \ I : I in l} (reversely ordered); equals
/// {ground \ I} whenever the full ground set is a member. Its TDAG is the
/// reverse of the original's.
DistributiveLattice complementary_lattice(const DistributiveLattice& l);

/// Vertex poset of a TDAG (i <= j iff i -> j or i = j).
Poset poset_of_tdag(const Tdag& g);

} // namespace lci
