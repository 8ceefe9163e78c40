#pragma once

#include <string>
#include <vector>

#include "lci/lattice.hpp"
#include "lci/rng.hpp"
#include "lci/serialize.hpp"
#include "lci/tdag.hpp"

namespace testutil {

inline lci::GroundSet digits_ground(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return lci::GroundSet(labels);
}

/// Set from a compact label string ("123") or comma list ("11,21").
inline lci::IndexSet S(const lci::GroundSet& g, const std::string& text) {
    return lci::parse_set_string(g, text);
}

inline std::vector<lci::IndexSet> sets(const lci::GroundSet& g,
                                       const std::vector<std::string>& texts) {
    std::vector<lci::IndexSet> out;
    for (const auto& t : texts) out.push_back(S(g, t));
    return out;
}

/// The running-example lattice generated by {123, 234, 345} over {1..5}.
inline lci::DistributiveLattice fig1_lattice() {
    auto g = digits_ground(5);
    auto gens = sets(g, {"123", "234", "345"});
    return lci::lattice_from_generators(g, gens);
}

/// The running-example TDAG (edges 3->1, 3->2, 3->4, 3->5, 2->1, 4->5).
inline lci::Tdag fig2_tdag() {
    lci::GroundSet v({"1", "2", "3", "4", "5"});
    auto e = [&](const char* a, const char* b) {
        return std::pair<int, int>{v.index_of(a), v.index_of(b)};
    };
    return lci::Tdag(v, {e("3", "1"), e("3", "2"), e("3", "4"), e("3", "5"), e("2", "1"),
                         e("4", "5")});
}

inline std::vector<std::string> element_strings(const lci::DistributiveLattice& l) {
    std::vector<std::string> out;
    for (const auto& e : l.elements()) out.push_back(lci::set_to_string(l.ground(), e));
    return out;
}

/// Random generating family over an n-element digit ground set.
inline std::vector<lci::IndexSet> random_family(lci::Rng& rng, int n, int count) {
    std::vector<lci::IndexSet> gens;
    for (int k = 0; k < count; ++k) {
        lci::IndexSet s(n);
        for (int i = 0; i < n; ++i) {
            if (rng.next_double() < 0.4) s.set(i);
        }
        gens.push_back(s);
    }
    return gens;
}

/// Random transitively closed DAG over an n-element digit ground set.
inline lci::Tdag random_tdag(lci::Rng& rng, int n, double edge_prob = 0.3) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_double() < edge_prob) edges.emplace_back(i, j);
        }
    }
    return lci::Tdag::from_digraph(lci::Digraph{digits_ground(n), edges}, /*close=*/true);
}

} // namespace testutil
