#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "lci/monomial_ideal.hpp"

using namespace lci;

namespace {
std::set<std::string> gen_strings(const MonomialIdeal& m) {
    std::set<std::string> out;
    for (const auto& g : m.gens) {
        std::string s;
        for (int v : g.members()) {
            if (!s.empty()) s += "*";
            s += m.vars.label(v);
        }
        out.insert(s.empty() ? "1" : s);
    }
    return out;
}

MonomialIdeal ideal_over(int nvars, const std::vector<std::vector<int>>& supports) {
    std::vector<std::string> names;
    for (int v = 1; v <= nvars; ++v) names.push_back("x_" + std::to_string(v));
    std::vector<IndexSet> gens;
    for (const auto& sup : supports) {
        IndexSet s(nvars);
        for (int v : sup) s.set(v);
        gens.push_back(s);
    }
    return make_ideal(GroundSet(names), std::move(gens));
}

MonomialIdeal random_ideal(Rng& rng, int nvars, int ngens) {
    std::vector<std::vector<int>> sup;
    for (int k = 0; k < ngens; ++k) {
        std::vector<int> s;
        for (int v = 0; v < nvars; ++v) {
            if (rng.next_double() < 0.45) s.push_back(v);
        }
        if (s.empty()) s.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(nvars))));
        sup.push_back(s);
    }
    return ideal_over(nvars, sup);
}
} // namespace

TEST_CASE("make_ideal minimizes and sorts") {
    auto m = ideal_over(3, {{0, 1}, {2}, {0, 2}, {2}});
    CHECK(gen_strings(m) == std::set<std::string>{"x_3", "x_1*x_2"});
    CHECK(m.gens.size() == 2);
    CHECK(m.gens[0] == IndexSet(3, {2})); // canonical order: smallest first
}

TEST_CASE("M_Q of the running-example join-irreducible poset") {
    auto l = testutil::fig1_lattice();
    auto m = ideal_M_Q(join_irreducibles(l));
    CHECK(m.gens.size() == 10);
    for (const auto& g : m.gens) CHECK(g.count() == 5);
    auto strs = gen_strings(m);
    CHECK(strs.count("y_1*y_2*y_3*y_4*y_5"));
    CHECK(strs.count("z_3*y_1*y_2*y_4*y_5"));
    CHECK(strs.count("z_2*z_3*y_1*y_4*y_5"));
    CHECK(strs.count("z_3*z_4*y_1*y_2*y_5"));
    CHECK(strs.count("z_1*z_2*z_3*y_4*y_5"));
    CHECK(strs.count("z_2*z_3*z_4*y_1*y_5"));
    CHECK(strs.count("z_3*z_4*z_5*y_1*y_2"));
    CHECK(strs.count("z_1*z_2*z_3*z_4*y_5"));
    CHECK(strs.count("z_2*z_3*z_4*z_5*y_1"));
    CHECK(strs.count("z_1*z_2*z_3*z_4*z_5"));
}

TEST_CASE("M_Q degenerate and chain cases") {
    Poset empty = poset_from_pairs(GroundSet(std::vector<std::string>{}), {});
    auto m = ideal_M_Q(empty);
    REQUIRE(m.gens.size() == 1);
    CHECK(m.gens[0].empty()); // unit generator

    Poset chain = poset_from_pairs(testutil::digits_ground(3), {{0, 1}, {1, 2}});
    CHECK(ideal_M_Q(chain).gens.size() == 4);
}

TEST_CASE("alexander dual of the running example M_Q") {
    auto l = testutil::fig1_lattice();
    auto m = ideal_M_Q(join_irreducibles(l));
    const std::set<std::string> expected{"z_3*y_2", "z_3*y_1", "z_2*y_1", "z_3*y_4", "z_3*y_5",
                                         "z_4*y_5", "z_1*y_1", "z_2*y_2", "z_3*y_3", "z_4*y_4",
                                         "z_5*y_5"};
    auto d1 = alexander_dual_intersect(m);
    auto d2 = alexander_dual_hitting(m);
    CHECK(gen_strings(d1) == expected);
    CHECK(d1 == d2);
}

TEST_CASE("trivial duals") {
    // <x1 x2>* = <x1, x2>
    auto m = ideal_over(2, {{0, 1}});
    CHECK(gen_strings(alexander_dual_intersect(m)) == std::set<std::string>{"x_1", "x_2"});
    // <x1, x2>* = <x1 x2>
    auto m2 = ideal_over(2, {{0}, {1}});
    CHECK(gen_strings(alexander_dual_hitting(m2)) == std::set<std::string>{"x_1*x_2"});
    // zero <-> unit
    auto zero = make_ideal(m.vars, {});
    auto unit = alexander_dual_intersect(zero);
    REQUIRE(unit.gens.size() == 1);
    CHECK(unit.gens[0].empty());
    CHECK(alexander_dual_hitting(unit).gens.empty());
}

TEST_CASE("dual algorithms agree and the dual is an involution") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int nvars = 2 + static_cast<int>(rng.next_below(7));
        auto m = random_ideal(rng, nvars, 1 + static_cast<int>(rng.next_below(6)));
        auto di = alexander_dual_intersect(m);
        auto dh = alexander_dual_hitting(m);
        CHECK(di == dh);
        CHECK(alexander_dual_intersect(di) == m);
        CHECK(alexander_dual_hitting(dh) == m);
    }
}

TEST_CASE("dual generators are minimal") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_ideal(rng, 6, 4);
        auto d = alexander_dual_intersect(m);
        for (size_t a = 0; a < d.gens.size(); ++a) {
            for (size_t b = 0; b < d.gens.size(); ++b) {
                if (a != b) CHECK_FALSE(d.gens[a].subset_of(d.gens[b]));
            }
        }
    }
}

TEST_CASE("hitting-set cap raises a resource error") {
    Rng rng(47);
    auto m = random_ideal(rng, 8, 8);
    CHECK_THROWS_AS(alexander_dual_hitting(m, 2), ResourceError);
}

TEST_CASE("edge ideal") {
    Tdag g = testutil::fig2_tdag();
    auto m = edge_ideal(g);
    CHECK(gen_strings(m) == std::set<std::string>{"z_3*y_1", "z_3*y_2", "z_3*y_4", "z_3*y_5",
                                                  "z_2*y_1", "z_4*y_5"});

    Tdag empty(testutil::digits_ground(3), {});
    CHECK(edge_ideal(empty).gens.empty());

    Digraph single{testutil::digits_ground(2), {{0, 1}}};
    CHECK(gen_strings(edge_ideal(single)) == std::set<std::string>{"z_1*y_2"});

    Digraph looped{testutil::digits_ground(2), {{0, 0}}};
    CHECK_THROWS_AS(edge_ideal(looped), DomainError);
}

TEST_CASE("tdag recovery from the dual") {
    auto l = testutil::fig1_lattice();
    auto dual = alexander_dual_intersect(ideal_M_Q(join_irreducibles(l)));

    auto bip = bipartite_edges(dual);
    CHECK(bip.edges.size() == 6);
    std::set<std::string> loops(bip.loops.begin(), bip.loops.end());
    CHECK(loops == std::set<std::string>{"1", "2", "3", "4", "5"});

    Tdag g = tdag_from_dual(dual);
    CHECK(g.same_graph(testutil::fig2_tdag()));
}

TEST_CASE("loops-only dual gives an edgeless tdag") {
    std::vector<std::string> names{"z_1", "z_2", "y_1", "y_2"};
    std::vector<IndexSet> gens;
    IndexSet a(4);
    a.set(0);
    a.set(2);
    IndexSet b(4);
    b.set(1);
    b.set(3);
    gens = {a, b};
    Tdag g = tdag_from_dual(make_ideal(GroundSet(names), gens));
    CHECK(g.size() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("tdag_from_dual rejects malformed and non-transitive input") {
    // Degree-3 generator.
    auto bad = ideal_over(3, {{0, 1, 2}});
    CHECK_THROWS_AS(tdag_from_dual(bad), FormatError);

    // z-z generator.
    std::vector<std::string> names{"z_1", "z_2", "y_1", "y_2"};
    IndexSet zz(4);
    zz.set(0);
    zz.set(1);
    CHECK_THROWS_AS(tdag_from_dual(make_ideal(GroundSet(names), {zz})), FormatError);

    // Non-transitive edge set 1->2, 2->3 without 1->3 over three labels.
    std::vector<std::string> n3{"z_1", "z_2", "z_3", "y_1", "y_2", "y_3"};
    IndexSet e12(6), e23(6);
    e12.set(0);
    e12.set(4);
    e23.set(1);
    e23.set(5);
    CHECK_THROWS_AS(tdag_from_dual(make_ideal(GroundSet(n3), {e12, e23})), ContractViolation);
}

TEST_CASE("poset round trip through M_Q, dual and tdag recovery") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(6));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.next_double() < 0.3) pairs.emplace_back(i, j);
            }
        }
        Poset q = poset_from_pairs(testutil::digits_ground(n), pairs);
        auto dual = alexander_dual_hitting(ideal_M_Q(q));

        auto bip = bipartite_edges(dual);
        CHECK(bip.loops.size() == static_cast<size_t>(n)); // z_i y_i always present

        Tdag g = tdag_from_dual(dual);
        std::set<std::pair<std::string, std::string>> got;
        for (auto [i, j] : g.edges()) {
            got.emplace(g.vertices().label(i), g.vertices().label(j));
        }
        std::set<std::pair<std::string, std::string>> want;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j && q.less_equal(i, j)) {
                    want.emplace(q.nodes.label(i), q.nodes.label(j));
                }
            }
        }
        CHECK(got == want);
    }
}

TEST_CASE("ideal text rendering") {
    auto m = ideal_over(2, {{0, 1}});
    CHECK(ideal_to_text(m) == "x_1*x_2\n");
    CHECK(ideal_to_cas_list(m) == "{x_1*x_2}");
    CHECK(ideal_to_text(make_ideal(m.vars, {})) == "0\n");
}
