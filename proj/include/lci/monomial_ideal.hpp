#pragma once

#include <string>
#include <vector>

#include "lci/poset.hpp"
#include "lci/tdag.hpp"

namespace lci {

/// Default cap on intermediate transversal families in the hitting-set dual.
constexpr std::size_t kDefaultTransversalCap = 100'000;

/// Squarefree monomial ideal: named variables plus minimal generator
/// supports in canonical order. Construction minimizes (drops generators
/// whose support contains another's), deduplicates and sorts, so two equal
/// ideals compare equal structurally. The zero ideal has no generators; the
/// unit ideal has the single empty support.
struct MonomialIdeal {
    GroundSet vars;
    std::vector<IndexSet> gens;

    bool operator==(const MonomialIdeal& other) const {
        return vars == other.vars && gens == other.gens;
    }
};

MonomialIdeal make_ideal(GroundSet vars, std::vector<IndexSet> gens);

/// Drop supports that strictly contain another (plus duplicates); the
/// remaining minimal supports in canonical order.
std::vector<IndexSet> minimize_supports(std::vector<IndexSet> supports);

/// z/y edge decomposition of a degree-2 ideal over paired variables.
struct BipartiteEdgeSet {
    std::vector<std::pair<std::string, std::string>> edges; // (z label, y label), i != j
    std::vector<std::string> loops;                         // labels with generator z_i y_i
};

/// M_Q = <u_I : I order ideal of q> over variables z_l.., y_l.. named after
/// q's nodes. Every generator has degree |q|; for the empty poset the single
/// generator is the unit (degenerate case).
MonomialIdeal ideal_M_Q(const Poset& q);

/// Alexander dual via the defining intersection of variable primes
/// m^{a_1} n ... n m^{a_r}, expanded pairwise and minimized.
MonomialIdeal alexander_dual_intersect(const MonomialIdeal& m);

/// Alexander dual as the minimal transversals of the generator supports.
/// Independent algorithm; must produce the same ideal as the intersection
/// route. Throws ResourceError past `cap` intermediate transversals.
MonomialIdeal alexander_dual_hitting(const MonomialIdeal& m,
                                     std::size_t cap = kDefaultTransversalCap);

/// Edge ideal <z_i y_j : i -> j edge>. Throws DomainError on self-loops.
MonomialIdeal edge_ideal(const Digraph& g);
MonomialIdeal edge_ideal(const Tdag& g);

/// Split a paired z/y ideal with degree-2 generators into proper edges and
/// loops. Throws FormatError when a generator is not of the z_i*y_j form.
BipartiteEdgeSet bipartite_edges(const MonomialIdeal& dual);

/// Recover the TDAG whose edge ideal (plus loops) the dual is. Throws
/// FormatError on malformed generators and ContractViolation when the edge
/// set is not transitive-acyclic.
Tdag tdag_from_dual(const MonomialIdeal& dual);

/// One generator per line, "z_3*y_2" style; "0" for the zero ideal.
std::string ideal_to_text(const MonomialIdeal& m);

/// "{g1, g2, ...}" list form for computer-algebra input.
std::string ideal_to_cas_list(const MonomialIdeal& m);

} // namespace lci
