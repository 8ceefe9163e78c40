#include "lci/timeseries.hpp"

namespace lci {

void SeriesSpec::validate() const {
    if (series < 1) throw DomainError("series count must be >= 1");
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    if (hub < 1 || hub > series) throw DomainError("hub must name one of the series");
}

std::string SeriesSpec::label(int i, int s) const {
    // Depends on (i, s) only, never on the horizon, so labels agree across
    // graphs of different horizons (advance_time matches them up by name).
    if (i <= 9 && s <= 9) return std::to_string(i) + std::to_string(s);
    return std::to_string(i) + "_" + std::to_string(s);
}

namespace {
GroundSet timeseries_vertices(const SeriesSpec& spec, int horizon) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(spec.series * horizon));
    for (int s = 1; s <= horizon; ++s) {
        for (int i = 1; i <= spec.series; ++i) labels.push_back(spec.label(i, s));
    }
    return GroundSet(labels);
}

Tdag build_tdag(const SeriesSpec& spec, int horizon) {
    GroundSet vertices = timeseries_vertices(spec, horizon);
    auto vid = [&](int i, int s) { return vertices.index_of(spec.label(i, s)); };
    std::vector<std::pair<int, int>> edges;
    for (int s = 1; s <= horizon; ++s) {
        for (int u = s + 1; u <= horizon; ++u) {
            for (int i = 1; i <= spec.series; ++i) edges.emplace_back(vid(i, s), vid(i, u));
            for (int j = 1; j <= spec.series; ++j) {
                if (j != spec.hub) edges.emplace_back(vid(spec.hub, s), vid(j, u));
            }
        }
    }
    return Tdag(std::move(vertices), edges);
}
} // namespace

Tdag timeseries_tdag(const SeriesSpec& spec) {
    spec.validate();
    return build_tdag(spec, spec.horizon);
}

DistributiveLattice timeseries_lattice(const SeriesSpec& spec, std::size_t cap) {
    spec.validate();
    return lattice_of_tdag(timeseries_tdag(spec), cap);
}

std::vector<UpdateStep> advance_time(const SeriesSpec& spec) {
    spec.validate();
    // Everything lives over the horizon t+1 ground set; the horizon t
    // ancestral sets embed since the vertex labels persist.
    SeriesSpec next = spec;
    next.horizon = spec.horizon + 1;
    Tdag g_next = build_tdag(next, next.horizon);

    std::vector<UpdateStep> steps;
    for (int i = 1; i <= spec.series; ++i) {
        UpdateStep step;
        step.series = i;
        step.new_top = ancestors(g_next, spec.label(i, next.horizon));
        // Old top = ancestral set of (i, t) in the horizon-t graph, re-read
        // in the bigger ground set: own series up to t plus hub up to t-1.
        IndexSet old_top(g_next.size());
        for (int s = 1; s <= spec.horizon; ++s) {
            old_top.set(g_next.vertices().index_of(spec.label(i, s)));
        }
        if (i != spec.hub) {
            for (int s = 1; s + 1 <= spec.horizon; ++s) {
                old_top.set(g_next.vertices().index_of(spec.label(spec.hub, s)));
            }
        }
        step.old_top = old_top;
        step.innovation = step.new_top.set_difference(old_top);
        steps.push_back(std::move(step));
    }
    return steps;
}

} // namespace lci
