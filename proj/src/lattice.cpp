#include "lci/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace lci {

std::optional<int> DistributiveLattice::index_of(const IndexSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int DistributiveLattice::require_index(const IndexSet& s) const {
    auto idx = index_of(s);
    if (!idx) throw DomainError("set is not a lattice member: " + set_to_string(ground_, s));
    return *idx;
}

int DistributiveLattice::meet(int i, int j) const {
    return require_index(elems_[static_cast<size_t>(i)].set_intersect(elems_[static_cast<size_t>(j)]));
}

int DistributiveLattice::join(int i, int j) const {
    return require_index(elems_[static_cast<size_t>(i)].set_union(elems_[static_cast<size_t>(j)]));
}

std::vector<int> DistributiveLattice::upper_covers(int i) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_) {
        if (lo == i) out.push_back(hi);
    }
    return out;
}

std::vector<int> DistributiveLattice::lower_covers(int i) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers_) {
        if (hi == i) out.push_back(lo);
    }
    return out;
}

namespace {

std::vector<std::pair<int, int>> lattice_covers(const std::vector<IndexSet>& elems) {
    const int m = static_cast<int>(elems.size());
    std::vector<IndexSet> leq(static_cast<size_t>(m), IndexSet(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (elems[static_cast<size_t>(i)].subset_of(elems[static_cast<size_t>(j)])) {
                leq[static_cast<size_t>(i)].set(j);
            }
        }
    }
    return transitive_reduction(leq);
}

} // namespace

DistributiveLattice lattice_from_elements(const GroundSet& ground, std::vector<IndexSet> elements) {
    const int n = ground.size();
    std::unordered_set<IndexSet, IndexSet::Hash> family;
    for (const auto& e : elements) {
        if (e.universe_size() != n) throw DomainError("element over wrong ground set");
        family.insert(e);
    }
    family.insert(IndexSet(n));
    std::vector<IndexSet> elems(family.begin(), family.end());
    std::sort(elems.begin(), elems.end(), canonical_less);

    DistributiveLattice l;
    l.ground_ = ground;
    l.elems_ = std::move(elems);
    for (int i = 0; i < static_cast<int>(l.elems_.size()); ++i) {
        l.index_.emplace(l.elems_[static_cast<size_t>(i)], i);
    }
    // Closure validation: meet and join of every pair must be members.
    for (size_t i = 0; i < l.elems_.size(); ++i) {
        for (size_t j = i + 1; j < l.elems_.size(); ++j) {
            if (!l.index_.count(l.elems_[i].set_union(l.elems_[j])) ||
                !l.index_.count(l.elems_[i].set_intersect(l.elems_[j]))) {
                throw DomainError("element family is not closed under union/intersection");
            }
        }
    }
    l.covers_ = lattice_covers(l.elems_);
    return l;
}

DistributiveLattice lattice_from_generators(const GroundSet& ground, std::span<const IndexSet> gens,
                                            std::size_t cap) {
    const int n = ground.size();
    std::unordered_set<IndexSet, IndexSet::Hash> family;
    std::vector<IndexSet> work;
    auto add = [&](const IndexSet& s) {
        if (family.insert(s).second) {
            work.push_back(s);
            if (family.size() > cap) {
                throw ResourceError("lattice closure exceeded the safety cap of " +
                                    std::to_string(cap) + " elements");
            }
        }
    };
    add(IndexSet(n));
    for (const auto& g : gens) {
        if (g.universe_size() != n) throw DomainError("generator over wrong ground set");
        add(g);
    }
    // Worklist fixpoint: combine each new element with everything seen so far.
    std::vector<IndexSet> seen;
    size_t head = 0;
    while (head < work.size()) {
        IndexSet cur = work[head++];
        for (const auto& other : seen) {
            add(cur.set_union(other));
            add(cur.set_intersect(other));
        }
        seen.push_back(cur);
    }
    return lattice_from_elements(ground, std::vector<IndexSet>(family.begin(), family.end()));
}

Poset join_irreducibles(const DistributiveLattice& l) {
    struct Ji {
        int elem_idx;
        IndexSet increment;
    };
    std::vector<Ji> jis;
    for (int i = 0; i < l.size(); ++i) {
        if (i == l.bottom_index()) continue;
        auto lower = l.lower_covers(i);
        if (lower.size() == 1) {
            jis.push_back({i, l.element(i).set_difference(l.element(lower[0]))});
        }
    }
    // Node order: by position of the increment's first ground label, so
    // single-label increments come out in ground order.
    std::sort(jis.begin(), jis.end(),
              [](const Ji& a, const Ji& b) { return a.increment.min_member() < b.increment.min_member(); });

    std::vector<std::string> labels;
    std::vector<IndexSet> payload;
    for (const auto& ji : jis) {
        labels.push_back(set_to_string(l.ground(), ji.increment));
        payload.push_back(l.element(ji.elem_idx));
    }
    const int m = static_cast<int>(jis.size());
    std::vector<IndexSet> leq(static_cast<size_t>(m), IndexSet(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (payload[static_cast<size_t>(a)].subset_of(payload[static_cast<size_t>(b)])) {
                leq[static_cast<size_t>(a)].set(b);
            }
        }
    }
    Poset q = poset_from_leq(GroundSet(labels), leq);
    q.payload = std::move(payload);
    return q;
}

std::vector<IndexSet> join_irreducible_increments(const DistributiveLattice& l) {
    Poset q = join_irreducibles(l);
    std::vector<IndexSet> incs;
    incs.reserve(q.payload.size());
    for (size_t k = 0; k < q.payload.size(); ++k) {
        int idx = l.require_index(q.payload[k]);
        auto lower = l.lower_covers(idx);
        incs.push_back(l.element(idx).set_difference(l.element(lower.at(0))));
    }
    return incs;
}

bool birkhoff_check(const DistributiveLattice& l) {
    Poset q = join_irreducibles(l);
    std::vector<IndexSet> ideals = order_ideals(q);
    std::unordered_set<IndexSet, IndexSet::Hash> ideal_set(ideals.begin(), ideals.end());

    const int m = q.size();
    std::vector<IndexSet> image;
    image.reserve(static_cast<size_t>(l.size()));
    for (int i = 0; i < l.size(); ++i) {
        IndexSet s(m);
        for (int k = 0; k < m; ++k) {
            if (q.payload[static_cast<size_t>(k)].subset_of(l.element(i))) s.set(k);
        }
        image.push_back(s);
    }
    // The map must be a bijection onto the order ideals...
    std::unordered_set<IndexSet, IndexSet::Hash> distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) return false;
    if (image.size() != ideals.size()) return false;
    for (const auto& s : image) {
        if (!ideal_set.count(s)) return false;
    }
    // ...and an order isomorphism.
    for (int i = 0; i < l.size(); ++i) {
        for (int j = 0; j < l.size(); ++j) {
            bool in_l = l.leq(i, j);
            bool in_ideals = image[static_cast<size_t>(i)].subset_of(image[static_cast<size_t>(j)]);
            if (in_l != in_ideals) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> saturated_chains(const DistributiveLattice& l, const IndexSet& from,
                                               const IndexSet& to, std::size_t cap) {
    int lo = l.require_index(from);
    int hi = l.require_index(to);
    if (!from.subset_of(to)) throw DomainError("chain endpoints are not nested");

    std::vector<std::vector<int>> chains;
    std::vector<int> path{lo};
    // DFS over cover steps staying inside the interval [from, to].
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == hi) {
            chains.push_back(path);
            if (chains.size() > cap) throw ResourceError("saturated chain enumeration exceeded cap");
            return;
        }
        for (int nxt : l.upper_covers(cur)) {
            if (!l.element(nxt).subset_of(to)) continue;
            path.push_back(nxt);
            self(self, nxt);
            path.pop_back();
        }
    };
    dfs(dfs, lo);
    return chains;
}

std::vector<int> canonical_chain(const DistributiveLattice& l, const IndexSet& to) {
    int hi = l.require_index(to);
    std::vector<int> chain{l.bottom_index()};
    while (chain.back() != hi) {
        int best = -1;
        for (int nxt : l.upper_covers(chain.back())) {
            if (!l.element(nxt).subset_of(to)) continue;
            if (best == -1 || nxt < best) best = nxt;
        }
        if (best == -1) throw ContractViolation("no cover step towards lattice member");
        chain.push_back(best);
    }
    return chain;
}

} // namespace lci
