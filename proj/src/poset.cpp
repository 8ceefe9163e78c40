#include "lci/poset.hpp"

#include <algorithm>
#include <unordered_set>

namespace lci {

IndexSet Poset::down_set(int i) const {
    IndexSet out(size());
    for (int j = 0; j < size(); ++j) {
        if (less_equal(j, i)) out.set(j);
    }
    return out;
}

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<IndexSet>& leq) {
    const int n = static_cast<int>(leq.size());
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq[static_cast<size_t>(i)].test(j)) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k) {
                if (k != i && k != j && leq[static_cast<size_t>(i)].test(k) &&
                    leq[static_cast<size_t>(k)].test(j)) {
                    is_cover = false;
                }
            }
            if (is_cover) covers.emplace_back(i, j);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

Poset poset_from_leq(GroundSet nodes, const std::vector<IndexSet>& leq) {
    const int n = nodes.size();
    if (static_cast<int>(leq.size()) != n) throw DomainError("relation size mismatch");
    for (int i = 0; i < n; ++i) {
        if (leq[static_cast<size_t>(i)].universe_size() != n) {
            throw DomainError("relation row over wrong universe");
        }
        if (!leq[static_cast<size_t>(i)].test(i)) throw DomainError("relation not reflexive");
        for (int j = 0; j < n; ++j) {
            if (!leq[static_cast<size_t>(i)].test(j)) continue;
            if (i != j && leq[static_cast<size_t>(j)].test(i)) {
                throw DomainError("relation not antisymmetric");
            }
            if (!leq[static_cast<size_t>(j)].subset_of(leq[static_cast<size_t>(i)])) {
                throw DomainError("relation not transitive");
            }
        }
    }
    Poset q;
    q.nodes = std::move(nodes);
    q.leq = leq;
    q.covers = transitive_reduction(leq);
    return q;
}

Poset poset_from_pairs(GroundSet nodes, const std::vector<std::pair<int, int>>& less_than) {
    const int n = nodes.size();
    std::vector<IndexSet> leq(static_cast<size_t>(n), IndexSet(n));
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i)].set(i);
    for (auto [i, j] : less_than) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw DomainError("relation pair out of range");
        leq[static_cast<size_t>(i)].set(j);
    }
    // Reflexive-transitive closure (Warshall on bit rows).
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (leq[static_cast<size_t>(i)].test(k)) {
                leq[static_cast<size_t>(i)] =
                    leq[static_cast<size_t>(i)].set_union(leq[static_cast<size_t>(k)]);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && leq[static_cast<size_t>(i)].test(j) && leq[static_cast<size_t>(j)].test(i)) {
                throw DomainError("relation has a cycle");
            }
        }
    }
    return poset_from_leq(std::move(nodes), leq);
}

std::vector<IndexSet> order_ideals(const Poset& q) {
    const int n = q.size();
    std::vector<IndexSet> strict_down(static_cast<size_t>(n), IndexSet(n));
    for (int v = 0; v < n; ++v) {
        strict_down[static_cast<size_t>(v)] = q.down_set(v);
        strict_down[static_cast<size_t>(v)].reset(v);
    }
    std::unordered_set<IndexSet, IndexSet::Hash> seen;
    std::vector<IndexSet> work{IndexSet(n)};
    seen.insert(work.back());
    size_t head = 0;
    while (head < work.size()) {
        IndexSet ideal = work[head++];
        for (int v = 0; v < n; ++v) {
            if (ideal.test(v) || !strict_down[static_cast<size_t>(v)].subset_of(ideal)) continue;
            IndexSet grown = ideal;
            grown.set(v);
            if (seen.insert(grown).second) work.push_back(grown);
        }
    }
    std::sort(work.begin(), work.end(), canonical_less);
    return work;
}

namespace {
std::uint64_t count_ideals_rec(const Poset& q, IndexSet active) {
    if (active.empty()) return 1;
    // Pick a maximal element among active nodes and branch on membership.
    int m = -1;
    for (int v : active.members()) {
        bool maximal = true;
        for (int w : active.members()) {
            if (w != v && q.less_equal(v, w)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            m = v;
            break;
        }
    }
    // Exclude m: ideals of active \ {m} that avoid m entirely.
    IndexSet without = active;
    without.reset(m);
    std::uint64_t excluded = count_ideals_rec(q, without);
    // Include m: forces the whole down-set of m; free choice on the rest.
    IndexSet rest = active.set_difference(q.down_set(m).set_intersect(active));
    std::uint64_t included = count_ideals_rec(q, rest);
    return excluded + included;
}
} // namespace

std::uint64_t count_order_ideals_recursive(const Poset& q) {
    return count_ideals_rec(q, IndexSet::full(q.size()));
}

} // namespace lci
