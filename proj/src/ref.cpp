#include "lci/ref.hpp"

#include <algorithm>
#include <cmath>

namespace lci::ref {

MarginTable<double> margin(const DiscreteJoint& d, const IndexSet& vars) {
    AssignmentSpace space = d.space();
    const auto proj = space.projection(vars);
    const int n = space.num_vars();
    MarginTable<double> out{vars,
                            std::vector<double>(static_cast<size_t>(space.margin_size(vars)), 0.0)};
    for (std::int64_t f = 0; f < space.total(); ++f) {
        std::int64_t key = 0;
        for (int v = 0; v < n; ++v) key += space.digit(f, v) * proj[static_cast<size_t>(v)];
        out.probs[static_cast<size_t>(key)] += d.probs[static_cast<size_t>(f)];
    }
    return out;
}

namespace {
double lookup(const AssignmentSpace& space, const MarginTable<double>& m,
              const std::vector<std::int64_t>& proj, std::int64_t f) {
    std::int64_t key = 0;
    for (int v = 0; v < space.num_vars(); ++v) key += space.digit(f, v) * proj[static_cast<size_t>(v)];
    return m.probs[static_cast<size_t>(key)];
}
} // namespace

CheckReport check_hibi_relation(const DiscreteJoint& d, const IndexSet& i, const IndexSet& j,
                                double tol) {
    AssignmentSpace space = d.space();
    const IndexSet u = i.set_union(j), k = i.set_intersect(j);
    const auto mu = margin(d, u), mk = margin(d, k), mi = margin(d, i), mj = margin(d, j);
    const auto pu = space.projection(u), pk = space.projection(k), pi = space.projection(i),
               pj = space.projection(j);
    double dev = 0.0;
    for (std::int64_t f = 0; f < space.total(); ++f) {
        dev = std::max(dev, std::fabs(lookup(space, mu, pu, f) * lookup(space, mk, pk, f) -
                                      lookup(space, mi, pi, f) * lookup(space, mj, pj, f)));
    }
    return CheckReport{dev <= tol, dev};
}

CheckReport check_ci(const DiscreteJoint& d, const CiStatement& s, double tol) {
    AssignmentSpace space = d.space();
    const IndexSet abc = s.a.set_union(s.b).set_union(s.c);
    const IndexSet ac = s.a.set_union(s.c), bc = s.b.set_union(s.c);
    const auto m1 = margin(d, abc), m2 = margin(d, s.c), m3 = margin(d, ac), m4 = margin(d, bc);
    const auto p1 = space.projection(abc), p2 = space.projection(s.c), p3 = space.projection(ac),
               p4 = space.projection(bc);
    double dev = 0.0;
    for (std::int64_t f = 0; f < space.total(); ++f) {
        dev = std::max(dev, std::fabs(lookup(space, m1, p1, f) * lookup(space, m2, p2, f) -
                                      lookup(space, m3, p3, f) * lookup(space, m4, p4, f)));
    }
    return CheckReport{dev <= tol, dev};
}

double shannon_H(const DiscreteJoint& d, const IndexSet& i) {
    AssignmentSpace space = d.space();
    const auto mi = margin(d, i);
    const auto proj = space.projection(i);
    double h = 0.0;
    for (std::int64_t f = 0; f < space.total(); ++f) {
        const double p = d.probs[static_cast<size_t>(f)];
        if (p > 0.0) h += p * std::log(lookup(space, mi, proj, f));
    }
    return h;
}

std::vector<IndexSet> minimize_supports(std::vector<IndexSet> supports) {
    std::sort(supports.begin(), supports.end(), canonical_less);
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<IndexSet> out;
    for (const auto& s : supports) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (kept.subset_of(s)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(s);
    }
    return out;
}

} // namespace lci::ref
