#pragma once

#include <vector>

#include "lci/lattice.hpp"
#include "lci/tdag.hpp"

namespace lci {

/// Hub-structured multivariate time series: every series depends on its own
/// past, and the hub series' past drives all others.
struct SeriesSpec {
    int series = 0;
    int horizon = 0;
    int hub = 0;

    void validate() const;
    /// Vertex label for (series i, time s); compact "is" when both fit a digit.
    std::string label(int i, int s) const;
};

/// Vertices (i, s) in time-major order; edges (i,s) -> (i,u) for s < u and
/// (hub,s) -> (j,u) for j != hub, s < u. Transitively closed by construction;
/// edgeless at horizon 1.
Tdag timeseries_tdag(const SeriesSpec& spec);

/// Ancestral-set lattice of the time-series TDAG.
DistributiveLattice timeseries_lattice(const SeriesSpec& spec, std::size_t cap = kDefaultLatticeCap);

/// One step of the time advance for one series: the top join-irreducible at
/// horizon t+1 versus horizon t, plus the innovation labels appended.
/// Sets live over the horizon t+1 ground set.
struct UpdateStep {
    int series = 0;
    IndexSet old_top;
    IndexSet new_top;
    IndexSet innovation;
};

/// Innovations for advancing spec.horizon -> spec.horizon + 1, one per series.
std::vector<UpdateStep> advance_time(const SeriesSpec& spec);

} // namespace lci
