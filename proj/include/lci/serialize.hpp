#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lci/discrete.hpp"
#include "lci/gaussian.hpp"
#include "lci/info.hpp"
#include "lci/monomial_ideal.hpp"

namespace lci {

using json = nlohmann::json;

// --- set / statement text -------------------------------------------------

/// Parse a set rendering back into an IndexSet: "{}" is empty, comma
/// separates labels, and a compact string like "123" splits per character
/// when the ground set has single-character labels.
IndexSet parse_set_string(const GroundSet& ground, const std::string& text);

// --- JSON -----------------------------------------------------------------

json ground_to_json(const GroundSet& g);
GroundSet ground_from_json(const json& j);

/// {"ground": [labels], "elements": [[labels], ...], "covers": [[lo, hi], ...]}
json lattice_to_json(const DistributiveLattice& l);
DistributiveLattice lattice_from_json(const json& j);

json poset_to_json(const Poset& q);

/// {"vertices": [labels], "edges": [[from, to], ...]} with labeled edges.
json tdag_to_json(const Tdag& g);
Digraph digraph_from_json(const json& j);

/// {"vars": [names], "gens": [[0/1 exponent bits], ...]}
json ideal_to_json(const MonomialIdeal& m);
MonomialIdeal ideal_from_json(const json& j);

/// {"ground": [labels], "cards": [...], "probs": [...]}; probs row-major with
/// the last variable fastest. "ground" may be omitted on input (labels then
/// default to "1".."n"). String entries like "3/10" select the exact mode.
json joint_to_json(const DiscreteJoint& d);
DiscreteJoint joint_from_json(const json& j);
ExactJoint exact_joint_from_json(const json& j);
/// True when the probs array holds rational strings.
bool joint_json_is_exact(const json& j);

/// {"ground": [labels], "A": [[row], ...]}
json gaussian_to_json(const GaussianModel& m);
GaussianModel gaussian_from_json(const json& j);

/// Flat object mapping the set rendering (without braces; "" for the empty
/// set) to the value.
json valuation_to_json(const GroundSet& ground, const Valuation& v);
Valuation valuation_from_json(const GroundSet& ground, const json& j);

// --- DOT ------------------------------------------------------------------

/// Hasse diagram as an undirected DOT graph, drawn bottom-to-top with one
/// rank per cardinality.
std::string lattice_hasse_dot(const DistributiveLattice& l);

std::string tdag_to_dot(const Tdag& g);

/// Parse a DOT digraph (the subset this library emits: node and edge
/// statements, optional quoting, attribute brackets ignored).
Digraph digraph_from_dot(const std::string& text);

/// TDAG with one value per edge, rendered as edge labels (the entropy
/// decomposition view).
std::string edge_increments_dot(const EdgeIncrements& inc);

} // namespace lci
