#include "lci/serialize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

namespace lci {

IndexSet parse_set_string(const GroundSet& ground, const std::string& text) {
    if (text.empty() || text == "{}") return IndexSet(ground.size());
    std::vector<std::string> tokens;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) tokens.push_back(tok);
        }
    } else if (ground.find(text)) {
        tokens.push_back(text);
    } else if (ground.single_char_labels()) {
        for (char c : text) tokens.emplace_back(1, c);
    } else {
        throw FormatError("cannot parse set: " + text);
    }
    return set_from_labels(ground, tokens);
}

// --- JSON -----------------------------------------------------------------

namespace {
json set_to_label_array(const GroundSet& ground, const IndexSet& s) {
    json arr = json::array();
    for (int v : s.members()) arr.push_back(ground.label(v));
    return arr;
}

IndexSet set_from_label_array(const GroundSet& ground, const json& arr) {
    std::vector<std::string> labels;
    for (const auto& l : arr) labels.push_back(l.get<std::string>());
    return set_from_labels(ground, labels);
}
} // namespace

json ground_to_json(const GroundSet& g) {
    return json{{"ground", g.labels()}};
}

GroundSet ground_from_json(const json& j) {
    return GroundSet(j.at("ground").get<std::vector<std::string>>());
}

json lattice_to_json(const DistributiveLattice& l) {
    json elems = json::array();
    for (const auto& e : l.elements()) elems.push_back(set_to_label_array(l.ground(), e));
    json covers = json::array();
    for (auto [lo, hi] : l.covers()) covers.push_back(json::array({lo, hi}));
    return json{{"ground", l.ground().labels()}, {"elements", elems}, {"covers", covers}};
}

DistributiveLattice lattice_from_json(const json& j) {
    GroundSet ground(j.at("ground").get<std::vector<std::string>>());
    std::vector<IndexSet> elems;
    for (const auto& arr : j.at("elements")) elems.push_back(set_from_label_array(ground, arr));
    return lattice_from_elements(ground, std::move(elems));
}

json poset_to_json(const Poset& q) {
    json elems = json::array();
    for (int i = 0; i < q.size(); ++i) elems.push_back(json::array({q.nodes.label(i)}));
    json covers = json::array();
    for (auto [lo, hi] : q.covers) covers.push_back(json::array({lo, hi}));
    return json{{"ground", q.nodes.labels()}, {"elements", elems}, {"covers", covers}};
}

json tdag_to_json(const Tdag& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) {
        edges.push_back(json::array({g.vertices().label(i), g.vertices().label(j)}));
    }
    return json{{"vertices", g.vertices().labels()}, {"edges", edges}};
}

Digraph digraph_from_json(const json& j) {
    GroundSet vertices(j.at("vertices").get<std::vector<std::string>>());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a [from, to] pair");
        edges.emplace_back(vertices.index_of(e[0].get<std::string>()),
                           vertices.index_of(e[1].get<std::string>()));
    }
    return Digraph{std::move(vertices), std::move(edges)};
}

json ideal_to_json(const MonomialIdeal& m) {
    json gens = json::array();
    for (const auto& g : m.gens) {
        json bits = json::array();
        for (int v = 0; v < m.vars.size(); ++v) bits.push_back(g.test(v) ? 1 : 0);
        gens.push_back(bits);
    }
    return json{{"vars", m.vars.labels()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    GroundSet vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<IndexSet> gens;
    for (const auto& bits : j.at("gens")) {
        if (static_cast<int>(bits.size()) != vars.size()) {
            throw FormatError("exponent vector length does not match variables");
        }
        IndexSet s(vars.size());
        for (int v = 0; v < vars.size(); ++v) {
            const int e = bits[static_cast<size_t>(v)].get<int>();
            if (e != 0 && e != 1) throw FormatError("ideal is not squarefree (exponent > 1)");
            if (e == 1) s.set(v);
        }
        gens.push_back(s);
    }
    return make_ideal(std::move(vars), std::move(gens));
}

namespace {
GroundSet joint_ground(const json& j, size_t num_cards) {
    if (j.contains("ground")) return GroundSet(j.at("ground").get<std::vector<std::string>>());
    std::vector<std::string> labels;
    for (size_t i = 1; i <= num_cards; ++i) labels.push_back(std::to_string(i));
    return GroundSet(labels);
}
} // namespace

json joint_to_json(const DiscreteJoint& d) {
    return json{{"ground", d.ground.labels()}, {"cards", d.cards}, {"probs", d.probs}};
}

bool joint_json_is_exact(const json& j) {
    const auto& probs = j.at("probs");
    return !probs.empty() && probs.front().is_string();
}

DiscreteJoint joint_from_json(const json& j) {
    auto cards = j.at("cards").get<std::vector<int>>();
    auto probs = j.at("probs").get<std::vector<double>>();
    GroundSet ground = joint_ground(j, cards.size());
    return make_joint(std::move(ground), std::move(cards), std::move(probs));
}

ExactJoint exact_joint_from_json(const json& j) {
    auto cards = j.at("cards").get<std::vector<int>>();
    std::vector<Rat> probs;
    for (const auto& p : j.at("probs")) probs.push_back(rat_from_string(p.get<std::string>()));
    GroundSet ground = joint_ground(j, cards.size());
    return make_joint(std::move(ground), std::move(cards), std::move(probs));
}

json gaussian_to_json(const GaussianModel& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.factor.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.factor.cols(); ++c) row.push_back(m.factor(r, c));
        rows.push_back(row);
    }
    return json{{"ground", m.ground.labels()}, {"A", rows}};
}

GaussianModel gaussian_from_json(const json& j) {
    GroundSet ground(j.at("ground").get<std::vector<std::string>>());
    const auto& rows = j.at("A");
    const int n = ground.size();
    if (static_cast<int>(rows.size()) != n) throw FormatError("factor row count mismatch");
    Eigen::MatrixXd a(n, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != n) {
            throw FormatError("factor column count mismatch");
        }
        for (int c = 0; c < n; ++c) a(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].get<double>();
    }
    return make_gaussian(std::move(ground), std::move(a));
}

json valuation_to_json(const GroundSet& ground, const Valuation& v) {
    // Keys sorted canonically for stable output.
    std::vector<IndexSet> keys;
    keys.reserve(v.values.size());
    for (const auto& [s, _] : v.values) keys.push_back(s);
    std::sort(keys.begin(), keys.end(), canonical_less);
    json out = json::object();
    for (const auto& s : keys) {
        out[s.empty() ? std::string() : set_to_string(ground, s)] = v.values.at(s);
    }
    return out;
}

Valuation valuation_from_json(const GroundSet& ground, const json& j) {
    Valuation v;
    for (auto it = j.begin(); it != j.end(); ++it) {
        v.set(parse_set_string(ground, it.key()), it.value().get<double>());
    }
    return v;
}

// --- DOT ------------------------------------------------------------------

namespace {
std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }
} // namespace

std::string lattice_hasse_dot(const DistributiveLattice& l) {
    std::ostringstream out;
    out << "graph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    std::map<int, std::vector<int>> by_card;
    for (int i = 0; i < l.size(); ++i) by_card[l.element(i).count()].push_back(i);
    for (const auto& [card, idxs] : by_card) {
        out << "  { rank=same;";
        for (int i : idxs) out << " " << dot_quote(set_to_string(l.ground(), l.element(i))) << ";";
        out << " }\n";
    }
    for (auto [lo, hi] : l.covers()) {
        out << "  " << dot_quote(set_to_string(l.ground(), l.element(lo))) << " -- "
            << dot_quote(set_to_string(l.ground(), l.element(hi))) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string tdag_to_dot(const Tdag& g) {
    std::ostringstream out;
    out << "digraph tdag {\n";
    for (int i = 0; i < g.size(); ++i) out << "  " << dot_quote(g.vertices().label(i)) << ";\n";
    for (auto [i, j] : g.edges()) {
        out << "  " << dot_quote(g.vertices().label(i)) << " -> "
            << dot_quote(g.vertices().label(j)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {
struct DotTokenizer {
    const std::string& text;
    size_t pos = 0;

    std::string next() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';' ||
                text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text.compare(pos, 2, "//") == 0) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            if (text.compare(pos, 2, "/*") == 0) {
                size_t end = text.find("*/", pos + 2);
                if (end == std::string::npos) throw FormatError("unterminated DOT comment");
                pos = end + 2;
                continue;
            }
            break;
        }
        if (pos >= text.size()) return {};
        char c = text[pos];
        if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=') {
            ++pos;
            return std::string(1, c);
        }
        if (c == '-' && pos + 1 < text.size() && (text[pos + 1] == '>' || text[pos + 1] == '-')) {
            pos += 2;
            return text[pos - 1] == '>' ? "->" : "--";
        }
        if (c == '"') {
            size_t end = text.find('"', pos + 1);
            if (end == std::string::npos) throw FormatError("unterminated DOT string");
            std::string tok = text.substr(pos + 1, end - pos - 1);
            pos = end + 1;
            return "\"" + tok; // marker: quoted identifier
        }
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               std::string(";,{}[]=").find(text[pos]) == std::string::npos &&
               !(text[pos] == '-' && pos + 1 < text.size() &&
                 (text[pos + 1] == '>' || text[pos + 1] == '-'))) {
            ++pos;
        }
        return text.substr(start, pos - start);
    }
};

std::string unquote(const std::string& tok) {
    return (!tok.empty() && tok[0] == '"') ? tok.substr(1) : tok;
}
} // namespace

Digraph digraph_from_dot(const std::string& text) {
    DotTokenizer tz{text};
    std::string tok = tz.next();
    if (tok == "strict") tok = tz.next();
    if (tok != "digraph") throw FormatError("expected a DOT digraph");
    tok = tz.next();
    if (tok != "{") tok = tz.next(); // optional graph name
    if (tok != "{") throw FormatError("expected '{' in DOT input");

    std::vector<std::string> labels;
    std::map<std::string, int> ids;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(name);
        ids.emplace(name, id);
        return id;
    };

    // Pre-tokenize the statement list so statements can be parsed with
    // one-token lookahead (attribute assignments must not intern nodes).
    std::vector<std::string> toks;
    for (tok = tz.next(); !tok.empty() && tok != "}"; tok = tz.next()) toks.push_back(tok);
    if (tok != "}") throw FormatError("unterminated DOT graph");

    size_t k = 0;
    auto skip_attr_list = [&] {
        int depth = 1;
        ++k;
        while (depth > 0) {
            if (k >= toks.size()) throw FormatError("unterminated DOT attribute list");
            if (toks[k] == "[") ++depth;
            if (toks[k] == "]") --depth;
            ++k;
        }
    };
    while (k < toks.size()) {
        if (toks[k] == "[") {
            skip_attr_list();
            continue;
        }
        if (toks[k] == "--") throw FormatError("undirected edge in digraph input");
        if (toks[k] == "->") throw FormatError("edge with no source");
        std::string name = unquote(toks[k]);
        // Attribute assignment (rankdir=LR) or defaults block (node [...]).
        if (k + 1 < toks.size() && toks[k + 1] == "=") {
            k += 3;
            continue;
        }
        if (name == "graph" || name == "node" || name == "edge") {
            ++k;
            continue;
        }
        int cur = intern(name);
        ++k;
        while (k < toks.size() && toks[k] == "->") {
            if (k + 1 >= toks.size()) throw FormatError("dangling edge operator");
            if (toks[k + 1] == "[" || toks[k + 1] == "->") throw FormatError("malformed edge");
            int nxt = intern(unquote(toks[k + 1]));
            edges.emplace_back(cur, nxt);
            cur = nxt;
            k += 2;
        }
    }
    return Digraph{GroundSet(labels), std::move(edges)};
}

std::string edge_increments_dot(const EdgeIncrements& inc) {
    std::ostringstream out;
    out << "digraph increments {\n";
    const GroundSet& verts = inc.tdag.vertices();
    for (int i = 0; i < inc.tdag.size(); ++i) {
        out << "  " << dot_quote(verts.label(i)) << " [xlabel=\"" << std::setprecision(6)
            << inc.vertex_delta[static_cast<size_t>(i)] << "\"];\n";
    }
    for (const auto& [i, j, delta] : inc.edges) {
        out << "  " << dot_quote(verts.label(i)) << " -> " << dot_quote(verts.label(j))
            << " [label=\"" << std::setprecision(6) << delta << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace lci
