#include "lci/monomial_ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "lci/parallel.hpp"

namespace lci {

std::vector<IndexSet> minimize_supports(std::vector<IndexSet> supports) {
    std::sort(supports.begin(), supports.end(), canonical_less);
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    const std::int64_t k = static_cast<std::int64_t>(supports.size());
    std::vector<char> redundant(static_cast<size_t>(k), 0);
    // A support is redundant when a strictly smaller one divides it. Sorted
    // by cardinality, only earlier entries can divide later ones.
    par::for_each(k, [&](std::int64_t i) {
        for (std::int64_t j = 0; j < i; ++j) {
            if (supports[static_cast<size_t>(j)].subset_of(supports[static_cast<size_t>(i)])) {
                redundant[static_cast<size_t>(i)] = 1;
                return;
            }
        }
    });
    std::vector<IndexSet> out;
    out.reserve(static_cast<size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
        if (!redundant[static_cast<size_t>(i)]) out.push_back(supports[static_cast<size_t>(i)]);
    }
    return out;
}

MonomialIdeal make_ideal(GroundSet vars, std::vector<IndexSet> gens) {
    const int nv = vars.size();
    for (const auto& g : gens) {
        if (g.universe_size() != nv) throw DomainError("generator over wrong variable set");
    }
    return MonomialIdeal{std::move(vars), minimize_supports(std::move(gens))};
}

MonomialIdeal ideal_M_Q(const Poset& q) {
    const int n = q.size();
    std::vector<std::string> vars;
    vars.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) vars.push_back("z_" + q.nodes.label(i));
    for (int i = 0; i < n; ++i) vars.push_back("y_" + q.nodes.label(i));

    std::vector<IndexSet> gens;
    for (const auto& ideal : order_ideals(q)) {
        IndexSet support(2 * n);
        for (int i = 0; i < n; ++i) {
            if (ideal.test(i)) {
                support.set(i);
            } else {
                support.set(n + i);
            }
        }
        gens.push_back(support);
    }
    return make_ideal(GroundSet(vars), std::move(gens));
}

MonomialIdeal alexander_dual_intersect(const MonomialIdeal& m) {
    const int nv = m.vars.size();
    if (m.gens.empty()) {
        // Dual of the zero ideal is the unit ideal (empty intersection).
        return make_ideal(m.vars, {IndexSet(nv)});
    }
    std::vector<IndexSet> cur;
    for (int v : m.gens.front().members()) {
        IndexSet s(nv);
        s.set(v);
        cur.push_back(s);
    }
    for (size_t g = 1; g < m.gens.size(); ++g) {
        const auto members = m.gens[g].members();
        if (members.empty()) {
            // Intersecting with the zero prime ideal <> kills everything.
            cur.clear();
            break;
        }
        std::vector<IndexSet> expanded;
        expanded.reserve(cur.size() * members.size());
        for (const auto& c : cur) {
            for (int v : members) {
                IndexSet s = c;
                if (!s.test(v)) s.set(v);
                expanded.push_back(s);
            }
        }
        cur = minimize_supports(std::move(expanded));
    }
    return make_ideal(m.vars, std::move(cur));
}

MonomialIdeal alexander_dual_hitting(const MonomialIdeal& m, std::size_t cap) {
    const int nv = m.vars.size();
    std::vector<IndexSet> trans{IndexSet(nv)};
    for (const auto& g : m.gens) {
        if (g.empty()) {
            // The unit generator cannot be hit: no transversal exists.
            trans.clear();
            break;
        }
        std::vector<IndexSet> next;
        next.reserve(trans.size());
        for (const auto& t : trans) {
            if (t.intersects(g)) {
                next.push_back(t);
            } else {
                for (int v : g.members()) {
                    IndexSet grown = t;
                    grown.set(v);
                    next.push_back(grown);
                }
            }
        }
        if (next.size() > cap) {
            throw ResourceError("transversal family exceeded cap of " + std::to_string(cap));
        }
        trans = minimize_supports(std::move(next));
    }
    return make_ideal(m.vars, std::move(trans));
}

MonomialIdeal edge_ideal(const Digraph& g) {
    const int n = g.vertices.size();
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("z_" + g.vertices.label(i));
    for (int i = 0; i < n; ++i) vars.push_back("y_" + g.vertices.label(i));
    std::vector<IndexSet> gens;
    for (auto [i, j] : g.edges) {
        if (i == j) throw DomainError("self-loop on vertex " + g.vertices.label(i));
        IndexSet s(2 * n);
        s.set(i);
        s.set(n + j);
        gens.push_back(s);
    }
    return make_ideal(GroundSet(vars), std::move(gens));
}

MonomialIdeal edge_ideal(const Tdag& g) {
    return edge_ideal(Digraph{g.vertices(), g.edges()});
}

namespace {
struct VarName {
    bool is_z;
    std::string label;
};

VarName parse_var(const std::string& name) {
    if (name.size() > 2 && name[0] == 'z' && name[1] == '_') return {true, name.substr(2)};
    if (name.size() > 2 && name[0] == 'y' && name[1] == '_') return {false, name.substr(2)};
    throw FormatError("variable is not of the z_/y_ form: " + name);
}
} // namespace

BipartiteEdgeSet bipartite_edges(const MonomialIdeal& dual) {
    BipartiteEdgeSet out;
    for (const auto& g : dual.gens) {
        auto mem = g.members();
        if (mem.size() != 2) throw FormatError("generator is not quadratic");
        VarName a = parse_var(dual.vars.label(mem[0]));
        VarName b = parse_var(dual.vars.label(mem[1]));
        if (a.is_z == b.is_z) throw FormatError("generator is not of the form z_i*y_j");
        const std::string& zl = a.is_z ? a.label : b.label;
        const std::string& yl = a.is_z ? b.label : a.label;
        if (zl == yl) {
            out.loops.push_back(zl);
        } else {
            out.edges.emplace_back(zl, yl);
        }
    }
    return out;
}

Tdag tdag_from_dual(const MonomialIdeal& dual) {
    BipartiteEdgeSet bip = bipartite_edges(dual);
    // Vertex order follows the z-variable order of the ideal.
    std::vector<std::string> labels;
    for (int v = 0; v < dual.vars.size(); ++v) {
        VarName pv = parse_var(dual.vars.label(v));
        if (pv.is_z) labels.push_back(pv.label);
    }
    GroundSet vertices(labels);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [zl, yl] : bip.edges) {
        edges.emplace_back(vertices.index_of(zl), vertices.index_of(yl));
    }
    try {
        return Tdag(std::move(vertices), edges);
    } catch (const DomainError& e) {
        throw ContractViolation(std::string("dual edge set is not a TDAG: ") + e.what());
    }
}

namespace {
std::string gen_to_string(const MonomialIdeal& m, const IndexSet& g) {
    if (g.empty()) return "1";
    std::string out;
    for (int v : g.members()) {
        if (!out.empty()) out += "*";
        out += m.vars.label(v);
    }
    return out;
}
} // namespace

std::string ideal_to_text(const MonomialIdeal& m) {
    if (m.gens.empty()) return "0\n";
    std::string out;
    for (const auto& g : m.gens) out += gen_to_string(m, g) + "\n";
    return out;
}

std::string ideal_to_cas_list(const MonomialIdeal& m) {
    if (m.gens.empty()) return "{0}";
    std::string out = "{";
    for (size_t k = 0; k < m.gens.size(); ++k) {
        if (k > 0) out += ", ";
        out += gen_to_string(m, m.gens[k]);
    }
    return out + "}";
}

} // namespace lci
