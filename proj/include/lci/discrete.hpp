#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lci/lattice.hpp"
#include "lci/rational.hpp"
#include "lci/tdag.hpp"

namespace lci {

/// Conditional independence statement a _||_ b | c over a ground set.
/// a, b, c are pairwise disjoint, a and b non-empty; the pair (a, b) is kept
/// in canonical order so duplicates compare equal.
struct CiStatement {
    IndexSet a, b, c;

    CiStatement(IndexSet a_, IndexSet b_, IndexSet c_);

    bool operator==(const CiStatement& other) const {
        return a == other.a && b == other.b && c == other.c;
    }

    std::string to_string(const GroundSet& ground) const;
};

/// One statement (I\J, J\I, InJ) per Hibi binomial, deduplicated.
std::vector<CiStatement> ci_statements(const DistributiveLattice& l);

/// Row-major assignment indexing over per-variable cardinalities, last
/// variable fastest.
class AssignmentSpace {
public:
    explicit AssignmentSpace(std::vector<int> cards);

    std::int64_t total() const { return total_; }
    int num_vars() const { return static_cast<int>(cards_.size()); }
    int card(int v) const { return cards_[static_cast<size_t>(v)]; }
    int digit(std::int64_t index, int v) const {
        return static_cast<int>((index / strides_[static_cast<size_t>(v)]) % cards_[static_cast<size_t>(v)]);
    }
    std::int64_t stride(int v) const { return strides_[static_cast<size_t>(v)]; }

    /// Per-variable multipliers mapping a full assignment onto the marginal
    /// index over `vars` (zero for variables outside the margin).
    std::vector<std::int64_t> projection(const IndexSet& vars) const;
    /// Number of assignments of the `vars` margin.
    std::int64_t margin_size(const IndexSet& vars) const;

private:
    std::vector<int> cards_;
    std::vector<std::int64_t> strides_;
    std::int64_t total_;
};

/// Joint probability table over a ground set of discrete variables.
/// `positive` is set when every entry is strictly positive.
template <class T>
struct BasicJoint {
    GroundSet ground;
    std::vector<int> cards;
    std::vector<T> probs;
    bool positive = false;

    AssignmentSpace space() const { return AssignmentSpace(cards); }
};

using DiscreteJoint = BasicJoint<double>;
using ExactJoint = BasicJoint<Rat>;

/// Validates shape, non-negativity and unit total mass (within 1e-12 for
/// doubles, exactly for rationals) and detects positivity.
template <class T>
BasicJoint<T> make_joint(GroundSet ground, std::vector<int> cards, std::vector<T> probs);

template <class T>
struct MarginTable {
    IndexSet vars;
    std::vector<T> probs;
};

/// I-margin: sum over the variables outside `vars`.
template <class T>
MarginTable<T> margin(const BasicJoint<T>& d, const IndexSet& vars);

/// Outcome of a numerical identity check.
struct CheckReport {
    bool pass = false;
    double max_deviation = 0.0;
};

/// Hibi margin relation p_{IuJ} p_{InJ} = p_I p_J over every assignment.
/// Exact joints ignore `tol` and require deviation zero.
template <class T>
CheckReport check_hibi_relation(const BasicJoint<T>& d, const IndexSet& i, const IndexSet& j,
                                double tol);

/// CI check p_{aubuc} p_c = p_{auc} p_{buc} over every assignment.
template <class T>
CheckReport check_ci(const BasicJoint<T>& d, const CiStatement& s, double tol);

/// Ancestral factorization p(x) = prod_i p(x_i | x_{anc(i)\i}) from explicit
/// conditional tables; cond[v] is row-major over the assignments of the
/// ancestral set of v (minus v), each row a distribution over cards[v].
DiscreteJoint joint_from_conditionals(const Tdag& g, const std::vector<int>& cards,
                                      const std::vector<std::vector<double>>& cond);

/// Ancestral factorization sampler: p(x) = prod_i p(x_i | x_{anc(i)\i}) with
/// strictly positive seeded conditionals. The result satisfies every Hibi
/// relation and CI statement of lattice_of_tdag(g) by construction.
DiscreteJoint joint_from_tdag(const Tdag& g, const std::vector<int>& cards, std::uint64_t seed);

/// q_J = p_full / p_{[n]\J} as a table over full assignments. Requires a
/// strictly positive joint.
template <class T>
std::vector<T> q_margin(const BasicJoint<T>& d, const IndexSet& j);

/// Pointwise check q_{J1} q_{J2} = q_{J1 u J2}.
template <class T>
CheckReport check_q_product(const BasicJoint<T>& d, const IndexSet& j1, const IndexSet& j2,
                            double tol);

/// Pointwise duality p_I q_{[n]\I} = p_full.
template <class T>
CheckReport check_q_duality(const BasicJoint<T>& d, const IndexSet& i, double tol);

/// Ratio form of the duality for nested margins small c big:
/// p_big / p_small = q_{[n]\small} / q_{[n]\big} pointwise.
template <class T>
CheckReport check_duality_ratio(const BasicJoint<T>& d, const IndexSet& small, const IndexSet& big,
                                double tol);

/// Copy with `eps` added to one cell and the table renormalized.
DiscreteJoint perturb_joint(const DiscreteJoint& d, std::int64_t cell, double eps);

} // namespace lci
