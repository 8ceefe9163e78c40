#include "lci/hibi.hpp"

#include <algorithm>
#include <map>

namespace lci {

SquarefreeMonomial monomial_u(const DistributiveLattice& l, const IndexSet& i) {
    l.require_index(i);
    return SquarefreeMonomial{i, i.complement()};
}

SquarefreeMonomial monomial_u_prime(const DistributiveLattice& l, const IndexSet& i) {
    l.require_index(i);
    return SquarefreeMonomial{i, IndexSet(l.ground().size())};
}

std::vector<HibiBinomial> hibi_generators(const DistributiveLattice& l) {
    std::vector<HibiBinomial> out;
    for (int a = 0; a < l.size(); ++a) {
        for (int b = a + 1; b < l.size(); ++b) {
            if (!l.comparable(a, b)) out.push_back(HibiBinomial{l.element(a), l.element(b)});
        }
    }
    return out;
}

SquarefreeMonomial generator_g(const DistributiveLattice& l, std::string_view label) {
    int idx = l.ground().index_of(label);
    // The smallest lattice element containing the label; with closure under
    // intersection this is the intersection of all elements containing it.
    const IndexSet* best = nullptr;
    for (const auto& e : l.elements()) {
        if (e.test(idx) && (best == nullptr || e.subset_of(*best))) best = &e;
    }
    if (best == nullptr) {
        throw DomainError("no lattice element contains label " + std::string(label));
    }
    return monomial_u_prime(l, *best);
}

ZFactorization z_factorization(const DistributiveLattice& l, const IndexSet& j) {
    std::vector<int> chain = canonical_chain(l, j);
    ZFactorization f{j, {}};
    for (size_t k = 1; k < chain.size(); ++k) {
        f.factors.push_back(
            l.element(chain[k]).set_difference(l.element(chain[k - 1])));
    }
    return f;
}

namespace {
// Multiset of variable exponents for a monomial product; z variables are
// indexed 0..n-1 and y variables n..2n-1.
std::vector<int> product_exponents(int n, const std::vector<SquarefreeMonomial>& ms) {
    std::vector<int> exp(static_cast<size_t>(2 * n), 0);
    for (const auto& m : ms) {
        for (int v : m.z_support.members()) exp[static_cast<size_t>(v)] += 1;
        for (int v : m.y_support.members()) exp[static_cast<size_t>(n + v)] += 1;
    }
    return exp;
}
} // namespace

bool kernel_membership(const DistributiveLattice& l, const HibiBinomial& b) {
    const int n = l.ground().size();
    const IndexSet meet = b.meet(), join = b.join();
    // Both the (z, y) map and the z-only map must agree on the two sides.
    bool full = product_exponents(n, {monomial_u(l, b.i), monomial_u(l, b.j)}) ==
                product_exponents(n, {monomial_u(l, meet), monomial_u(l, join)});
    bool zonly = product_exponents(n, {monomial_u_prime(l, b.i), monomial_u_prime(l, b.j)}) ==
                 product_exponents(n, {monomial_u_prime(l, meet), monomial_u_prime(l, join)});
    return full && zonly;
}

std::string monomial_to_string(const GroundSet& ground, const SquarefreeMonomial& m) {
    std::string out;
    for (int v : m.z_support.members()) {
        if (!out.empty()) out += "*";
        out += "z_" + ground.label(v);
    }
    for (int v : m.y_support.members()) {
        if (!out.empty()) out += "*";
        out += "y_" + ground.label(v);
    }
    return out.empty() ? "1" : out;
}

namespace {
std::string p_term(const GroundSet& ground, const IndexSet& s) {
    return "p_{" + (s.empty() ? std::string() : set_to_string(ground, s)) + "}";
}
} // namespace

std::string binomial_to_string(const GroundSet& ground, const HibiBinomial& b) {
    return p_term(ground, b.i) + "*" + p_term(ground, b.j) + "-" + p_term(ground, b.meet()) + "*" +
           p_term(ground, b.join());
}

std::string binomials_to_cas_list(const GroundSet& ground, const std::vector<HibiBinomial>& bs) {
    std::string out = "{";
    for (size_t k = 0; k < bs.size(); ++k) {
        if (k > 0) out += ", ";
        out += binomial_to_string(ground, bs[k]);
    }
    return out + "}";
}

} // namespace lci
