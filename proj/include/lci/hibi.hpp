#pragma once

#include <string>
#include <vector>

#include "lci/lattice.hpp"

namespace lci {

/// Product of distinct z- and y-variables over a common ground set.
/// Equality is support equality; degree = |z| + |y|.
struct SquarefreeMonomial {
    IndexSet z_support;
    IndexSet y_support;

    int degree() const { return z_support.count() + y_support.count(); }
    bool operator==(const SquarefreeMonomial& other) const {
        return z_support == other.z_support && y_support == other.y_support;
    }
};

/// Quadratic lattice relation p_I p_J - p_{I n J} p_{I u J} for an
/// incomparable pair, stored structurally as the four index sets.
struct HibiBinomial {
    IndexSet i;
    IndexSet j;

    IndexSet meet() const { return i.set_intersect(j); }
    IndexSet join() const { return i.set_union(j); }
};

/// Disjoint increments along a saturated chain from {} to `target`;
/// their union is `target`.
struct ZFactorization {
    IndexSet target;
    std::vector<IndexSet> factors;
};

/// u_I: z over I, y over the complement. `i` must be a lattice member.
SquarefreeMonomial monomial_u(const DistributiveLattice& l, const IndexSet& i);

/// u'_I: z over I only.
SquarefreeMonomial monomial_u_prime(const DistributiveLattice& l, const IndexSet& i);

/// One binomial per unordered incomparable pair, the canonically smaller
/// element first; pairs ordered by element index.
std::vector<HibiBinomial> hibi_generators(const DistributiveLattice& l);

/// g_i: u' of the smallest lattice element containing `label`. Throws
/// DomainError when no element contains it.
SquarefreeMonomial generator_g(const DistributiveLattice& l, std::string_view label);

/// Chain increments of the canonical saturated chain {} = J_0 c ... c J_r = j.
ZFactorization z_factorization(const DistributiveLattice& l, const IndexSet& j);

/// Verify that the binomial lies in the kernel of both monomial maps:
/// u_I u_J = u_{InJ} u_{IuJ} and u'_I u'_J = u'_{InJ} u'_{IuJ} as multisets
/// of variables.
bool kernel_membership(const DistributiveLattice& l, const HibiBinomial& b);

/// Render "z_a*z_b*y_c" with variables in ground order; "1" for the unit.
std::string monomial_to_string(const GroundSet& ground, const SquarefreeMonomial& m);

/// Render "p_{23}*p_{34}-p_{3}*p_{234}".
std::string binomial_to_string(const GroundSet& ground, const HibiBinomial& b);

/// Computer-algebra style list: "{b1, b2, ...}".
std::string binomials_to_cas_list(const GroundSet& ground, const std::vector<HibiBinomial>& bs);

} // namespace lci
