#include "lci/tdag.hpp"

#include <algorithm>

namespace lci {

Tdag::Tdag(GroundSet vertices, const std::vector<std::pair<int, int>>& edges)
    : vertices_(std::move(vertices)) {
    const int n = vertices_.size();
    out_.assign(static_cast<size_t>(n), IndexSet(n));
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw DomainError("edge endpoint out of range");
        if (i == j) throw DomainError("self-loop on vertex " + vertices_.label(i));
        out_[static_cast<size_t>(i)].set(j);
    }
    // Acyclicity: in a transitive graph any cycle collapses to a mutual edge.
    for (int i = 0; i < n; ++i) {
        for (int j : out_[static_cast<size_t>(i)].members()) {
            if (out_[static_cast<size_t>(j)].test(i)) {
                throw DomainError("directed cycle between " + vertices_.label(i) + " and " +
                                  vertices_.label(j));
            }
            if (!out_[static_cast<size_t>(j)].subset_of(out_[static_cast<size_t>(i)])) {
                throw DomainError("graph is not transitive at edge " + vertices_.label(i) + " -> " +
                                  vertices_.label(j));
            }
        }
    }
}

Tdag Tdag::from_digraph(const Digraph& g, bool close) {
    if (!close) return Tdag(g.vertices, g.edges);
    const int n = g.vertices.size();
    std::vector<IndexSet> reach(static_cast<size_t>(n), IndexSet(n));
    for (auto [i, j] : g.edges) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw DomainError("edge endpoint out of range");
        reach[static_cast<size_t>(i)].set(j);
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (reach[static_cast<size_t>(i)].test(k)) {
                reach[static_cast<size_t>(i)] =
                    reach[static_cast<size_t>(i)].set_union(reach[static_cast<size_t>(k)]);
            }
        }
    }
    std::vector<std::pair<int, int>> closed;
    for (int i = 0; i < n; ++i) {
        for (int j : reach[static_cast<size_t>(i)].members()) {
            if (i != j) closed.emplace_back(i, j);
        }
    }
    return Tdag(g.vertices, closed);
}

std::vector<std::pair<int, int>> Tdag::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i) {
        for (int j : out_[static_cast<size_t>(i)].members()) out.emplace_back(i, j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Tdag::edge_count() const {
    int c = 0;
    for (const auto& row : out_) c += row.count();
    return c;
}

IndexSet Tdag::ancestral_set(int i) const {
    IndexSet anc(size());
    anc.set(i);
    for (int j = 0; j < size(); ++j) {
        if (out_[static_cast<size_t>(j)].test(i)) anc.set(j);
    }
    return anc;
}

bool Tdag::same_graph(const Tdag& other) const {
    if (size() != other.size()) return false;
    std::vector<std::string> a = vertices_.labels(), b = other.vertices_.labels();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    auto edge_labels = [](const Tdag& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [i, j] : g.edges()) out.emplace_back(g.vertices().label(i), g.vertices().label(j));
        std::sort(out.begin(), out.end());
        return out;
    };
    return edge_labels(*this) == edge_labels(other);
}

Tdag tdag_of_lattice(const DistributiveLattice& l) {
    Poset q = join_irreducibles(l);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < q.size(); ++a) {
        for (int b = 0; b < q.size(); ++b) {
            if (a != b && q.payload[static_cast<size_t>(a)].subset_of(q.payload[static_cast<size_t>(b)])) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Tdag(q.nodes, edges);
}

DistributiveLattice lattice_of_tdag(const Tdag& g, std::size_t cap) {
    Poset q = poset_of_tdag(g);
    std::vector<IndexSet> ideals = order_ideals(q);
    if (ideals.size() > cap) {
        throw ResourceError("order ideal lattice exceeded the safety cap of " + std::to_string(cap));
    }
    return lattice_from_elements(g.vertices(), std::move(ideals));
}

IndexSet ancestors(const Tdag& g, std::string_view label) {
    return g.ancestral_set(g.vertices().index_of(label));
}

Tdag reverse_tdag(const Tdag& g) {
    std::vector<std::pair<int, int>> rev;
    for (auto [i, j] : g.edges()) rev.emplace_back(j, i);
    return Tdag(g.vertices(), rev);
}

DistributiveLattice complementary_lattice(const DistributiveLattice& l) {
    // Complements are taken within the top element; when the full ground set
    // is a member (the usual case) this is the plain set complement. Taking
    // them within the top keeps the reverse-TDAG correspondence exact even
    // for lattices that do not cover their ground set.
    const IndexSet top = l.element(l.top_index());
    std::vector<IndexSet> elems;
    elems.reserve(static_cast<size_t>(l.size()));
    for (const auto& e : l.elements()) elems.push_back(top.set_difference(e));
    return lattice_from_elements(l.ground(), std::move(elems));
}

Poset poset_of_tdag(const Tdag& g) {
    const int n = g.size();
    std::vector<IndexSet> leq(static_cast<size_t>(n), IndexSet(n));
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i)].set(i);
    for (auto [a, b] : g.edges()) leq[static_cast<size_t>(a)].set(b);
    return poset_from_leq(g.vertices(), leq);
}

} // namespace lci
