#include "doctest.h"
#include "helpers.hpp"

#include "lci/poset.hpp"

using namespace lci;

namespace {
Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return poset_from_pairs(testutil::digits_ground(n), pairs);
}

Poset antichain_poset(int n) {
    return poset_from_pairs(testutil::digits_ground(n), {});
}
} // namespace

TEST_CASE("poset validation") {
    auto g3 = testutil::digits_ground(3);
    CHECK_THROWS_AS(poset_from_pairs(g3, {{0, 1}, {1, 0}}), DomainError);

    // Non-transitive explicit relation is rejected.
    std::vector<IndexSet> leq(3, IndexSet(3));
    for (int i = 0; i < 3; ++i) leq[i].set(i);
    leq[0].set(1);
    leq[1].set(2);
    CHECK_THROWS_AS(poset_from_leq(g3, leq), DomainError);

    // poset_from_pairs closes transitively instead.
    Poset q = poset_from_pairs(g3, {{0, 1}, {1, 2}});
    CHECK(q.less_equal(0, 2));
    CHECK(q.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("order ideals of a chain are prefixes") {
    auto ideals = order_ideals(chain_poset(3));
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0] == IndexSet(3));
    CHECK(ideals[1] == IndexSet(3, {0}));
    CHECK(ideals[2] == IndexSet(3, {0, 1}));
    CHECK(ideals[3] == IndexSet(3, {0, 1, 2}));
}

TEST_CASE("order ideals of an antichain are all subsets") {
    CHECK(order_ideals(antichain_poset(3)).size() == 8);
}

TEST_CASE("order ideal enumeration matches the recursive counter") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(6));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.next_double() < 0.35) pairs.emplace_back(i, j);
            }
        }
        Poset q = poset_from_pairs(testutil::digits_ground(n), pairs);
        CHECK(order_ideals(q).size() == count_order_ideals_recursive(q));
    }
}

TEST_CASE("transitive reduction of a chain keeps consecutive covers") {
    Poset q = chain_poset(4);
    CHECK(q.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(q.down_set(2) == IndexSet(4, {0, 1, 2}));
    CHECK(q.up_set(2) == IndexSet(4, {2, 3}));
}
