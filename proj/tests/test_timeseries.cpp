#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "lci/discrete.hpp"
#include "lci/hibi.hpp"
#include "lci/timeseries.hpp"

using namespace lci;

namespace {
std::set<std::pair<std::string, std::string>> edge_set(const Tdag& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [i, j] : g.edges()) out.emplace(g.vertices().label(i), g.vertices().label(j));
    return out;
}
} // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(timeseries_tdag({0, 3, 1}), DomainError);
    CHECK_THROWS_AS(timeseries_tdag({3, 0, 1}), DomainError);
    CHECK_THROWS_AS(timeseries_tdag({3, 3, 4}), DomainError);
}

TEST_CASE("tdag of the three-series example") {
    Tdag g = timeseries_tdag({3, 3, 2});
    CHECK(g.size() == 9);
    CHECK(g.edge_count() == 15);
    auto edges = edge_set(g);
    // Within-series chains, including the transitive closure edges i1 -> i3.
    for (std::string i : {"1", "2", "3"}) {
        CHECK(edges.count({i + "1", i + "2"}));
        CHECK(edges.count({i + "2", i + "3"}));
        CHECK(edges.count({i + "1", i + "3"}));
    }
    // Hub past drives the other series.
    CHECK(edges.count({"21", "12"}));
    CHECK(edges.count({"21", "13"}));
    CHECK(edges.count({"21", "32"}));
    CHECK(edges.count({"21", "33"}));
    CHECK(edges.count({"22", "13"}));
    CHECK(edges.count({"22", "33"}));
    // No same-time or reverse influence.
    CHECK_FALSE(edges.count({"11", "21"}));
    CHECK_FALSE(edges.count({"22", "12"}));
}

TEST_CASE("degenerate specs") {
    Tdag single = timeseries_tdag({1, 2, 1});
    CHECK(single.edge_count() == 1);
    CHECK(edge_set(single).count({"11", "12"}));

    CHECK(timeseries_tdag({3, 1, 2}).edge_count() == 0); // independent at t = 1
}

TEST_CASE("lattice sizes") {
    CHECK(timeseries_lattice({3, 3, 2}).size() == 45);

    // Single series: chain lattice with t + 1 elements.
    CHECK(timeseries_lattice({1, 4, 1}).size() == 5);

    // (2, 2, 1): verified against the independent recursive ideal counter.
    Tdag g = timeseries_tdag({2, 2, 1});
    CHECK(timeseries_lattice({2, 2, 1}).size() ==
          count_order_ideals_recursive(poset_of_tdag(g)));
    CHECK(timeseries_lattice({2, 2, 1}).size() == 8);
}

TEST_CASE("join irreducible tops of the example lattice") {
    auto l = timeseries_lattice({3, 3, 2});
    Poset q = join_irreducibles(l);
    std::set<std::string> tops;
    for (const auto& p : q.payload) tops.insert(set_to_string(l.ground(), p));
    CHECK(tops.count("11,21,12,22,13"));
    CHECK(tops.count("21,22,23"));
    CHECK(tops.count("21,31,22,32,33"));
    CHECK(q.size() == 9);
}

TEST_CASE("advance time innovations") {
    auto steps = advance_time({3, 3, 2});
    REQUIRE(steps.size() == 3);
    Tdag g4 = timeseries_tdag({3, 4, 2});
    const auto& ground = g4.vertices();

    CHECK(set_to_string(ground, steps[0].innovation) == "23,14");
    CHECK(set_to_string(ground, steps[1].innovation) == "24");
    CHECK(set_to_string(ground, steps[2].innovation) == "23,34");

    for (const auto& step : steps) {
        CHECK_FALSE(step.innovation.empty());
        CHECK(step.new_top == step.old_top.set_union(step.innovation));
        CHECK_FALSE(step.old_top.intersects(step.innovation));
    }

    // New tops are the horizon-4 top-layer join irreducibles.
    CHECK(set_to_string(ground, steps[0].new_top) == "11,21,12,22,13,23,14");
    CHECK(set_to_string(ground, steps[1].new_top) == "21,22,23,24");
    CHECK(set_to_string(ground, steps[2].new_top) == "21,31,22,32,23,33,34");
}

TEST_CASE("advanced ancestral sets generate the advanced lattice") {
    // Updating the lattice means updating every ancestral set; the closure
    // of the advanced ancestral sets must equal the horizon-4 lattice.
    SeriesSpec next{3, 4, 2};
    auto l4 = timeseries_lattice(next);
    Tdag g4 = timeseries_tdag(next);
    std::vector<IndexSet> anc_sets;
    for (int v = 0; v < g4.size(); ++v) anc_sets.push_back(g4.ancestral_set(v));
    auto closure = lattice_from_generators(g4.vertices(), anc_sets);
    CHECK(closure.elements() == l4.elements());
}

TEST_CASE("innovation monomial identity") {
    // u' of the new top equals u' of the old top times the innovation z's.
    auto steps = advance_time({3, 3, 2});
    auto l4 = timeseries_lattice({3, 4, 2});
    for (const auto& step : steps) {
        auto u_new = monomial_u_prime(l4, step.new_top);
        IndexSet expect = step.old_top.set_union(step.innovation);
        CHECK(u_new.z_support == expect);
    }
}

TEST_CASE("model validity: sampled joint satisfies the headline statement") {
    SeriesSpec spec{3, 2, 2};
    Tdag g = timeseries_tdag(spec);
    auto d = joint_from_tdag(g, std::vector<int>(6, 2), 1);
    const auto& ground = g.vertices();
    // First series up to t _||_ third series up to t | hub up to t-1:
    // {11,12} _||_ {31,32} | {21}.
    CiStatement s(parse_set_string(ground, "11,12"), parse_set_string(ground, "31,32"),
                  parse_set_string(ground, "21"));
    CHECK(check_ci(d, s, 1e-10).pass);

    // And it is one of the extracted lattice statements.
    bool found = false;
    for (const auto& st : ci_statements(lattice_of_tdag(g))) {
        if (st == s) found = true;
    }
    CHECK(found);
}

TEST_CASE("monotone growth in horizon and series count") {
    int prev = 0;
    for (int t = 1; t <= 4; ++t) {
        int size = timeseries_lattice({2, t, 1}).size();
        CHECK(size >= prev);
        prev = size;
    }
    CHECK(timeseries_lattice({3, 2, 2}).size() >= timeseries_lattice({2, 2, 2}).size());
}

TEST_CASE("lattice cap raises a resource error") {
    CHECK_THROWS_AS(timeseries_lattice({3, 3, 2}, 10), ResourceError);
}

TEST_CASE("advance across the two-digit time boundary") {
    // Horizon 9 -> 10 switches the label scheme for new vertices; the
    // lookups must still line up.
    auto steps = advance_time({2, 9, 1});
    REQUIRE(steps.size() == 2);
    Tdag g10 = timeseries_tdag({2, 10, 1});
    const auto& ground = g10.vertices();
    CHECK(set_to_string(ground, steps[0].innovation) == "1_10");
    CHECK(set_to_string(ground, steps[1].innovation) == "19,2_10");
}
