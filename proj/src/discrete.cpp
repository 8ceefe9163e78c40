#include "lci/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lci/hibi.hpp"
#include "lci/parallel.hpp"
#include "lci/rng.hpp"

namespace lci {

CiStatement::CiStatement(IndexSet a_, IndexSet b_, IndexSet c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.empty() || b.empty()) throw DomainError("CI statement with empty side");
    if (a.intersects(b) || a.intersects(c) || b.intersects(c)) {
        throw DomainError("CI statement sets are not pairwise disjoint");
    }
    if (canonical_less(b, a)) std::swap(a, b);
}

std::string CiStatement::to_string(const GroundSet& ground) const {
    return set_to_string(ground, a) + " _||_ " + set_to_string(ground, b) + " | " +
           set_to_string(ground, c);
}

namespace {
struct StatementHash {
    size_t operator()(const CiStatement& s) const {
        IndexSet::Hash h;
        return h(s.a) * 31 + h(s.b) * 7 + h(s.c);
    }
};
} // namespace

std::vector<CiStatement> ci_statements(const DistributiveLattice& l) {
    std::vector<CiStatement> out;
    std::unordered_set<CiStatement, StatementHash> seen;
    for (const auto& b : hibi_generators(l)) {
        CiStatement s(b.i.set_difference(b.j), b.j.set_difference(b.i), b.meet());
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

AssignmentSpace::AssignmentSpace(std::vector<int> cards) : cards_(std::move(cards)) {
    const int n = static_cast<int>(cards_.size());
    strides_.assign(static_cast<size_t>(n), 1);
    total_ = 1;
    for (int v = n - 1; v >= 0; --v) {
        if (cards_[static_cast<size_t>(v)] < 1) throw DomainError("cardinality must be >= 1");
        strides_[static_cast<size_t>(v)] = total_;
        total_ *= cards_[static_cast<size_t>(v)];
    }
}

std::vector<std::int64_t> AssignmentSpace::projection(const IndexSet& vars) const {
    std::vector<std::int64_t> proj(cards_.size(), 0);
    std::int64_t stride = 1;
    auto mem = vars.members();
    for (auto it = mem.rbegin(); it != mem.rend(); ++it) {
        proj[static_cast<size_t>(*it)] = stride;
        stride *= cards_[static_cast<size_t>(*it)];
    }
    return proj;
}

std::int64_t AssignmentSpace::margin_size(const IndexSet& vars) const {
    std::int64_t size = 1;
    for (int v : vars.members()) size *= cards_[static_cast<size_t>(v)];
    return size;
}

template <class T>
BasicJoint<T> make_joint(GroundSet ground, std::vector<int> cards, std::vector<T> probs) {
    if (static_cast<int>(cards.size()) != ground.size()) {
        throw DomainError("cardinality list does not match ground set");
    }
    AssignmentSpace space(cards);
    if (static_cast<std::int64_t>(probs.size()) != space.total()) {
        throw DomainError("probability table has wrong size");
    }
    bool positive = true;
    T sum(0);
    for (const T& p : probs) {
        if (p < T(0)) throw DomainError("negative probability entry");
        if (!(p > T(0))) positive = false;
        sum += p;
    }
    if constexpr (std::is_same_v<T, double>) {
        if (std::fabs(sum - 1.0) > 1e-12) throw DomainError("probabilities do not sum to 1");
    } else {
        if (sum != T(1)) throw DomainError("probabilities do not sum to 1 exactly");
    }
    return BasicJoint<T>{std::move(ground), std::move(cards), std::move(probs), positive};
}

template <class T>
MarginTable<T> margin(const BasicJoint<T>& d, const IndexSet& vars) {
    if (vars.universe_size() != d.ground.size()) throw DomainError("margin over wrong ground set");
    AssignmentSpace space = d.space();
    const IndexSet comp = vars.complement();
    const auto comp_mem = comp.members();
    const std::int64_t cells = space.margin_size(vars);

    // Base full-index of each marginal cell.
    const auto mem = vars.members();
    MarginTable<T> out{vars, std::vector<T>(static_cast<size_t>(cells), T(0))};

    auto cell_value = [&](std::int64_t cell) -> T {
        std::int64_t base = 0;
        std::int64_t rest = cell;
        for (auto it = mem.rbegin(); it != mem.rend(); ++it) {
            const int c = space.card(*it);
            base += (rest % c) * space.stride(*it);
            rest /= c;
        }
        // Serial inner sum over the complementary assignments, in canonical
        // order, so results do not depend on the thread partition.
        T sum(0);
        std::vector<int> digits(comp_mem.size(), 0);
        while (true) {
            std::int64_t off = 0;
            for (size_t k = 0; k < comp_mem.size(); ++k) {
                off += static_cast<std::int64_t>(digits[k]) * space.stride(comp_mem[k]);
            }
            sum += d.probs[static_cast<size_t>(base + off)];
            size_t k = comp_mem.size();
            while (k > 0) {
                --k;
                if (++digits[k] < space.card(comp_mem[k])) break;
                digits[k] = 0;
                if (k == 0) return sum;
            }
            if (comp_mem.empty()) return sum;
        }
    };

    if constexpr (std::is_same_v<T, double>) {
        par::for_each(cells, [&](std::int64_t cell) {
            out.probs[static_cast<size_t>(cell)] = cell_value(cell);
        });
    } else {
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            out.probs[static_cast<size_t>(cell)] = cell_value(cell);
        }
    }
    return out;
}

namespace {

/// Evaluates |lhs - rhs| of a four-margin product identity over every full
/// assignment and reports the max deviation.
template <class T>
CheckReport product_identity_check(const BasicJoint<T>& d, const IndexSet& lhs1, const IndexSet& lhs2,
                                   const IndexSet& rhs1, const IndexSet& rhs2, double tol) {
    AssignmentSpace space = d.space();
    const MarginTable<T> m_l1 = margin(d, lhs1), m_l2 = margin(d, lhs2);
    const MarginTable<T> m_r1 = margin(d, rhs1), m_r2 = margin(d, rhs2);
    const auto p_l1 = space.projection(lhs1), p_l2 = space.projection(lhs2);
    const auto p_r1 = space.projection(rhs1), p_r2 = space.projection(rhs2);
    const int n = space.num_vars();

    // Explicit return type: gmp expression templates must not escape.
    auto deviation = [&](std::int64_t f) -> T {
        std::int64_t k1 = 0, k2 = 0, k3 = 0, k4 = 0;
        for (int v = 0; v < n; ++v) {
            const std::int64_t digit = space.digit(f, v);
            k1 += digit * p_l1[static_cast<size_t>(v)];
            k2 += digit * p_l2[static_cast<size_t>(v)];
            k3 += digit * p_r1[static_cast<size_t>(v)];
            k4 += digit * p_r2[static_cast<size_t>(v)];
        }
        return m_l1.probs[static_cast<size_t>(k1)] * m_l2.probs[static_cast<size_t>(k2)] -
               m_r1.probs[static_cast<size_t>(k3)] * m_r2.probs[static_cast<size_t>(k4)];
    };

    if constexpr (std::is_same_v<T, double>) {
        double dev = par::max_abs(space.total(), deviation);
        return CheckReport{dev <= tol, dev};
    } else {
        T dev(0);
        for (std::int64_t f = 0; f < space.total(); ++f) {
            T v = deviation(f);
            if (v < T(0)) v = -v;
            if (v > dev) dev = v;
        }
        return CheckReport{dev == T(0), scalar_to_double(dev)};
    }
}

} // namespace

template <class T>
CheckReport check_hibi_relation(const BasicJoint<T>& d, const IndexSet& i, const IndexSet& j,
                                double tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    return product_identity_check(d, i.set_union(j), i.set_intersect(j), i, j, tol);
}

template <class T>
CheckReport check_ci(const BasicJoint<T>& d, const CiStatement& s, double tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    const IndexSet abc = s.a.set_union(s.b).set_union(s.c);
    return product_identity_check(d, abc, s.c, s.a.set_union(s.c), s.b.set_union(s.c), tol);
}

DiscreteJoint joint_from_conditionals(const Tdag& g, const std::vector<int>& cards,
                                      const std::vector<std::vector<double>>& cond) {
    const int n = g.size();
    if (static_cast<int>(cards.size()) != n) throw DomainError("cardinality list size mismatch");
    if (static_cast<int>(cond.size()) != n) throw DomainError("conditional table count mismatch");
    AssignmentSpace space(cards);

    std::vector<IndexSet> parents(static_cast<size_t>(n));
    std::vector<std::vector<std::int64_t>> parent_proj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        IndexSet par = g.ancestral_set(v);
        par.reset(v);
        const std::int64_t rows = space.margin_size(par);
        if (static_cast<std::int64_t>(cond[static_cast<size_t>(v)].size()) !=
            rows * cards[static_cast<size_t>(v)]) {
            throw DomainError("conditional table has wrong size for vertex " +
                              g.vertices().label(v));
        }
        parents[static_cast<size_t>(v)] = par;
        parent_proj[static_cast<size_t>(v)] = space.projection(par);
    }

    std::vector<double> probs(static_cast<size_t>(space.total()));
    par::for_each(space.total(), [&](std::int64_t f) {
        double p = 1.0;
        for (int v = 0; v < n; ++v) {
            std::int64_t row = 0;
            for (int w : parents[static_cast<size_t>(v)].members()) {
                row += static_cast<std::int64_t>(space.digit(f, w)) *
                       parent_proj[static_cast<size_t>(v)][static_cast<size_t>(w)];
            }
            p *= cond[static_cast<size_t>(v)][static_cast<size_t>(
                row * cards[static_cast<size_t>(v)] + space.digit(f, v))];
        }
        probs[static_cast<size_t>(f)] = p;
    });
    // The table is a product of normalized conditionals, so the mass is 1 up
    // to rounding; normalize the tiny residue away to satisfy validation.
    double total = par::block_sum(space.total(), [&](std::int64_t f) {
        return probs[static_cast<size_t>(f)];
    });
    for (double& p : probs) p /= total;
    return make_joint(g.vertices(), cards, std::move(probs));
}

DiscreteJoint joint_from_tdag(const Tdag& g, const std::vector<int>& cards, std::uint64_t seed) {
    const int n = g.size();
    if (static_cast<int>(cards.size()) != n) throw DomainError("cardinality list size mismatch");
    for (int c : cards) {
        if (c < 2) throw DomainError("alphabet sizes must be >= 2");
    }
    AssignmentSpace space(cards);

    // Conditional tables p(x_v | x_{anc(v) \ v}), built serially per vertex
    // from a seeded substream; strictly positive by construction.
    std::vector<std::vector<double>> cond(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        IndexSet par = g.ancestral_set(v);
        par.reset(v);
        const std::int64_t rows = space.margin_size(par);
        const int k = cards[static_cast<size_t>(v)];
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(v));
        std::vector<double>& table = cond[static_cast<size_t>(v)];
        table.resize(static_cast<size_t>(rows * k));
        for (std::int64_t r = 0; r < rows; ++r) {
            double total = 0.0;
            for (int x = 0; x < k; ++x) {
                double w = rng.next_double(0.1, 1.0);
                table[static_cast<size_t>(r * k + x)] = w;
                total += w;
            }
            for (int x = 0; x < k; ++x) table[static_cast<size_t>(r * k + x)] /= total;
        }
    }
    return joint_from_conditionals(g, cards, cond);
}

template <class T>
std::vector<T> q_margin(const BasicJoint<T>& d, const IndexSet& j) {
    if (!d.positive) throw PositivityError("q-margins require a strictly positive joint");
    AssignmentSpace space = d.space();
    const IndexSet comp = j.complement();
    const MarginTable<T> mc = margin(d, comp);
    // Denominator validation stays outside the parallel fill: exceptions may
    // not escape an OpenMP region.
    for (const T& denom : mc.probs) {
        if (!(denom > T(0))) throw PositivityError("zero margin in q computation");
    }
    const auto proj = space.projection(comp);
    const int n = space.num_vars();
    std::vector<T> out(static_cast<size_t>(space.total()));
    auto value = [&](std::int64_t f) -> T {
        std::int64_t key = 0;
        for (int v = 0; v < n; ++v) key += space.digit(f, v) * proj[static_cast<size_t>(v)];
        return d.probs[static_cast<size_t>(f)] / mc.probs[static_cast<size_t>(key)];
    };
    if constexpr (std::is_same_v<T, double>) {
        par::for_each(space.total(), [&](std::int64_t f) { out[static_cast<size_t>(f)] = value(f); });
    } else {
        for (std::int64_t f = 0; f < space.total(); ++f) out[static_cast<size_t>(f)] = value(f);
    }
    return out;
}

namespace {
template <class T>
CheckReport pointwise_compare(const std::vector<T>& lhs, const std::vector<T>& rhs, double tol) {
    if constexpr (std::is_same_v<T, double>) {
        double dev = par::max_abs(static_cast<std::int64_t>(lhs.size()), [&](std::int64_t f) {
            return lhs[static_cast<size_t>(f)] - rhs[static_cast<size_t>(f)];
        });
        return CheckReport{dev <= tol, dev};
    } else {
        T dev(0);
        for (size_t f = 0; f < lhs.size(); ++f) {
            T v = lhs[f] - rhs[f];
            if (v < T(0)) v = -v;
            if (v > dev) dev = v;
        }
        return CheckReport{dev == T(0), scalar_to_double(dev)};
    }
}
} // namespace

template <class T>
CheckReport check_q_product(const BasicJoint<T>& d, const IndexSet& j1, const IndexSet& j2,
                            double tol) {
    const auto q1 = q_margin(d, j1);
    const auto q2 = q_margin(d, j2);
    const auto q12 = q_margin(d, j1.set_union(j2));
    std::vector<T> lhs(q1.size());
    for (size_t f = 0; f < q1.size(); ++f) lhs[f] = q1[f] * q2[f];
    return pointwise_compare(lhs, q12, tol);
}

template <class T>
CheckReport check_q_duality(const BasicJoint<T>& d, const IndexSet& i, double tol) {
    AssignmentSpace space = d.space();
    const MarginTable<T> mi = margin(d, i);
    const auto proj = space.projection(i);
    const auto q = q_margin(d, i.complement());
    const int n = space.num_vars();
    std::vector<T> lhs(static_cast<size_t>(space.total()));
    for (std::int64_t f = 0; f < space.total(); ++f) {
        std::int64_t key = 0;
        for (int v = 0; v < n; ++v) key += space.digit(f, v) * proj[static_cast<size_t>(v)];
        lhs[static_cast<size_t>(f)] = mi.probs[static_cast<size_t>(key)] * q[static_cast<size_t>(f)];
    }
    return pointwise_compare(lhs, d.probs, tol);
}

template <class T>
CheckReport check_duality_ratio(const BasicJoint<T>& d, const IndexSet& small, const IndexSet& big,
                                double tol) {
    if (!small.subset_of(big)) throw DomainError("duality ratio requires nested margins");
    if (!d.positive) throw PositivityError("duality ratio requires a strictly positive joint");
    AssignmentSpace space = d.space();
    const MarginTable<T> ms = margin(d, small), mb = margin(d, big);
    const auto ps = space.projection(small), pb = space.projection(big);
    const auto q_small = q_margin(d, small.complement());
    const auto q_big = q_margin(d, big.complement());
    const int n = space.num_vars();
    std::vector<T> lhs(static_cast<size_t>(space.total())), rhs(static_cast<size_t>(space.total()));
    for (std::int64_t f = 0; f < space.total(); ++f) {
        std::int64_t ks = 0, kb = 0;
        for (int v = 0; v < n; ++v) {
            ks += space.digit(f, v) * ps[static_cast<size_t>(v)];
            kb += space.digit(f, v) * pb[static_cast<size_t>(v)];
        }
        lhs[static_cast<size_t>(f)] =
            mb.probs[static_cast<size_t>(kb)] / ms.probs[static_cast<size_t>(ks)];
        rhs[static_cast<size_t>(f)] = q_small[static_cast<size_t>(f)] / q_big[static_cast<size_t>(f)];
    }
    return pointwise_compare(lhs, rhs, tol);
}

DiscreteJoint perturb_joint(const DiscreteJoint& d, std::int64_t cell, double eps) {
    std::vector<double> probs = d.probs;
    probs.at(static_cast<size_t>(cell)) += eps;
    double total = 0.0;
    for (double p : probs) total += p;
    for (double& p : probs) p /= total;
    return make_joint(d.ground, d.cards, std::move(probs));
}

// Explicit instantiations for the double and exact-rational scalar types.
template BasicJoint<double> make_joint(GroundSet, std::vector<int>, std::vector<double>);
template BasicJoint<Rat> make_joint(GroundSet, std::vector<int>, std::vector<Rat>);
template MarginTable<double> margin(const BasicJoint<double>&, const IndexSet&);
template MarginTable<Rat> margin(const BasicJoint<Rat>&, const IndexSet&);
template CheckReport check_hibi_relation(const BasicJoint<double>&, const IndexSet&, const IndexSet&,
                                         double);
template CheckReport check_hibi_relation(const BasicJoint<Rat>&, const IndexSet&, const IndexSet&,
                                         double);
template CheckReport check_ci(const BasicJoint<double>&, const CiStatement&, double);
template CheckReport check_ci(const BasicJoint<Rat>&, const CiStatement&, double);
template std::vector<double> q_margin(const BasicJoint<double>&, const IndexSet&);
template std::vector<Rat> q_margin(const BasicJoint<Rat>&, const IndexSet&);
template CheckReport check_q_product(const BasicJoint<double>&, const IndexSet&, const IndexSet&,
                                     double);
template CheckReport check_q_product(const BasicJoint<Rat>&, const IndexSet&, const IndexSet&, double);
template CheckReport check_q_duality(const BasicJoint<double>&, const IndexSet&, double);
template CheckReport check_q_duality(const BasicJoint<Rat>&, const IndexSet&, double);
template CheckReport check_duality_ratio(const BasicJoint<double>&, const IndexSet&, const IndexSet&,
                                         double);
template CheckReport check_duality_ratio(const BasicJoint<Rat>&, const IndexSet&, const IndexSet&,
                                         double);

} // namespace lci
