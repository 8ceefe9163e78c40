#include "lci/info.hpp"

#include <cmath>

#include "lci/parallel.hpp"

namespace lci {

double Valuation::at(const IndexSet& s) const {
    auto it = values.find(s);
    if (it == values.end()) throw DomainError("valuation has no entry for the requested set");
    return it->second;
}

double shannon_H(const DiscreteJoint& d, const IndexSet& i) {
    AssignmentSpace space = d.space();
    const MarginTable<double> mi = margin(d, i);
    const auto proj = space.projection(i);
    const int n = space.num_vars();
    auto key_of = [&](std::int64_t f) {
        std::int64_t key = 0;
        for (int v = 0; v < n; ++v) key += space.digit(f, v) * proj[static_cast<size_t>(v)];
        return key;
    };
    if (!d.positive) {
        // Must happen outside the parallel sum: exceptions may not escape an
        // OpenMP region.
        for (std::int64_t f = 0; f < space.total(); ++f) {
            if (d.probs[static_cast<size_t>(f)] > 0.0 &&
                mi.probs[static_cast<size_t>(key_of(f))] <= 0.0) {
                throw PositivityError("zero margin on the support");
            }
        }
    }
    return par::block_sum(space.total(), [&](std::int64_t f) {
        const double p = d.probs[static_cast<size_t>(f)];
        if (p == 0.0) return 0.0;
        return p * std::log(mi.probs[static_cast<size_t>(key_of(f))]);
    });
}

Valuation shannon_valuation(const DiscreteJoint& d, const DistributiveLattice& l) {
    Valuation v;
    for (const auto& e : l.elements()) v.set(e, shannon_H(d, e));
    return v;
}

bool valuation_check(const Valuation& v, const DistributiveLattice& l, double tol) {
    for (int i = 0; i < l.size(); ++i) {
        for (int j = i + 1; j < l.size(); ++j) {
            const double lhs = v.at(l.element(l.meet(i, j))) + v.at(l.element(l.join(i, j)));
            const double rhs = v.at(l.element(i)) + v.at(l.element(j));
            if (std::fabs(lhs - rhs) > tol) return false;
        }
    }
    return true;
}

bool running_intersection_check(std::span<const IndexSet> sets) {
    const size_t k = sets.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            for (size_t m = j + 1; m < k; ++m) {
                if (!sets[i].set_intersect(sets[m]).subset_of(sets[j])) return false;
            }
        }
    }
    return true;
}

double rota_inclusion_exclusion(const Valuation& v, std::span<const IndexSet> sets) {
    if (!running_intersection_check(sets)) {
        throw PreconditionError("sets do not satisfy the running intersection property");
    }
    double total = 0.0;
    for (const auto& s : sets) total += v.at(s);
    for (size_t i = 1; i < sets.size(); ++i) {
        total -= v.at(sets[i - 1].set_intersect(sets[i]));
    }
    return total;
}

EdgeIncrements edge_increments(const Valuation& v, const DistributiveLattice& l) {
    Tdag g = tdag_of_lattice(l);
    Poset q = join_irreducibles(l);
    // Vertex v's increment: H(I(v)) - H(of the single element I(v) covers).
    std::vector<double> delta(static_cast<size_t>(g.size()), 0.0);
    for (int k = 0; k < q.size(); ++k) {
        const int elem = l.require_index(q.payload[static_cast<size_t>(k)]);
        const int pred = l.lower_covers(elem).at(0);
        delta[static_cast<size_t>(k)] = v.at(l.element(elem)) - v.at(l.element(pred));
    }
    EdgeIncrements out{std::move(g), std::move(delta), {}};
    for (auto [i, j] : out.tdag.edges()) {
        out.edges.emplace_back(i, j, out.vertex_delta[static_cast<size_t>(i)]);
    }
    return out;
}

std::vector<double> chain_increments(const Valuation& v, const DistributiveLattice& l,
                                     const std::vector<int>& chain) {
    std::vector<double> out;
    for (size_t k = 1; k < chain.size(); ++k) {
        out.push_back(v.at(l.element(chain[k])) - v.at(l.element(chain[k - 1])));
    }
    return out;
}

} // namespace lci
