#include "doctest.h"
#include "helpers.hpp"

#include "lci/indexset.hpp"

using namespace lci;
using testutil::S;

TEST_CASE("ground set rejects duplicates and resolves labels") {
    CHECK_THROWS_AS(GroundSet({"a", "a"}), DomainError);
    GroundSet g({"1", "2", "11"});
    CHECK(g.index_of("11") == 2);
    CHECK(!g.find("3"));
    CHECK_THROWS_AS(g.index_of("3"), DomainError);
    CHECK_FALSE(g.single_char_labels());
}

TEST_CASE("index set algebra") {
    IndexSet a(5, {0, 1, 2});
    IndexSet b(5, {2, 3});
    CHECK(a.set_union(b) == IndexSet(5, {0, 1, 2, 3}));
    CHECK(a.set_intersect(b) == IndexSet(5, {2}));
    CHECK(a.set_difference(b) == IndexSet(5, {0, 1}));
    CHECK(b.complement() == IndexSet(5, {0, 1, 4}));
    CHECK(a.intersects(b));
    CHECK(IndexSet(5, {2}).subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.count() == 3);
    CHECK(a.min_member() == 0);
    CHECK(IndexSet(5).min_member() == -1);
    CHECK_THROWS_AS(a.set_union(IndexSet(4)), DomainError);
}

TEST_CASE("index set works past one block") {
    IndexSet big(130);
    big.set(0);
    big.set(64);
    big.set(129);
    CHECK(big.count() == 3);
    CHECK(big.members() == std::vector<int>{0, 64, 129});
    CHECK(big.complement().count() == 127);
}

TEST_CASE("canonical order is cardinality then lexicographic") {
    auto g = testutil::digits_ground(5);
    CHECK(canonical_less(S(g, "{}"), S(g, "3")));
    CHECK(canonical_less(S(g, "3"), S(g, "23")));
    CHECK(canonical_less(S(g, "23"), S(g, "34")));
    CHECK(canonical_less(S(g, "123"), S(g, "234")));
    CHECK(canonical_less(S(g, "13"), S(g, "14")));
    CHECK_FALSE(canonical_less(S(g, "34"), S(g, "23")));
    CHECK_FALSE(canonical_less(S(g, "23"), S(g, "23")));
}

TEST_CASE("set rendering round trips") {
    auto g = testutil::digits_ground(5);
    CHECK(set_to_string(g, S(g, "123")) == "123");
    CHECK(set_to_string(g, IndexSet(5)) == "{}");

    GroundSet ts({"11", "21", "12"});
    IndexSet s(3, {0, 2});
    CHECK(set_to_string(ts, s) == "11,12");
    CHECK(parse_set_string(ts, "11,12") == s);
    CHECK(parse_set_string(ts, "{}").empty());
    CHECK(parse_set_string(ts, "11") == IndexSet(3, {0}));
    CHECK_THROWS_AS(parse_set_string(ts, "99"), Error);
}
