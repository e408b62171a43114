#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"
#include "sptough/toughness.hpp"

using namespace sptough;

// ==================== VALUE KINDS ====================

TEST_CASE("complete graphs have infinite toughness") {
    for (int n : {1, 2, 3, 5}) {
        toughness_value t = toughness(complete_graph(n));
        CHECK(t.kind == tough_kind::infinite);
        CHECK_FALSE(t.finite());
    }
    // parallel edges complete the underlying graph
    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK(toughness(doubled).kind == tough_kind::infinite);
}

TEST_CASE("disconnected graphs have toughness zero") {
    multigraph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(toughness(g).kind == tough_kind::zero);
}

TEST_CASE("kind ordering puts zero below finite below infinite") {
    toughness_value zero = toughness_value::make_zero();
    toughness_value half = toughness_value::make_finite(make_rational(1, 2), {1});
    toughness_value inf = toughness_value::make_infinite();
    CHECK(zero < half);
    CHECK(half < inf);
    CHECK(zero < inf);
    CHECK_FALSE(inf < half);
}

// ==================== EXACT VALUES ====================

TEST_CASE("small graph values are exact") {
    CHECK(toughness(path_graph(3)).value == make_rational(1, 2));
    CHECK(toughness(cycle_graph(4)).value == make_rational(1, 1));
    CHECK(toughness(cycle_graph(7)).value == make_rational(1, 1));
    CHECK(toughness(complete_bipartite_graph(2, 3)).value == make_rational(2, 3));
    CHECK(toughness(complete_bipartite_graph(2, 4)).value == make_rational(1, 2));
    CHECK(toughness(complete_bipartite_graph(3, 3)).value == make_rational(1, 1));
}

TEST_CASE("witness attains the optimum") {
    toughness_value t = toughness(path_graph(3));
    REQUIRE(t.finite());
    CHECK(t.witness == std::vector<int>{1});
    toughness_value c = toughness(cycle_graph(4));
    REQUIRE(c.finite());
    CHECK(components(cycle_graph(4), c.witness) == 2);
}

TEST_CASE("loops are ignored") {
    multigraph g = path_graph(3);
    g.add_edge(2, 2);
    CHECK(toughness(g).value == make_rational(1, 2));
}

// ==================== TOUGH SETS ====================

TEST_CASE("tough_sets lists every optimal cutset in order") {
    auto sets = tough_sets(cycle_graph(4));
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == std::vector<int>{0, 2});
    CHECK(sets[1] == std::vector<int>{1, 3});

    CHECK(tough_sets(path_graph(3)) == std::vector<std::vector<int>>{{1}});

    CHECK_THROWS_AS(tough_sets(complete_graph(3)), domain_error);
    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(tough_sets(split), domain_error);
}

// ==================== MINIMALITY ====================

TEST_CASE("minimality verdicts carry exact values and counterexamples") {
    minimality_verdict c5 = is_minimally_tough(cycle_graph(5));
    CHECK(c5.is_minimal);
    CHECK(c5.tau.value == make_rational(1, 1));
    CHECK_FALSE(c5.counterexample_edge.has_value());

    minimality_verdict k24 = is_minimally_tough(complete_bipartite_graph(2, 4));
    CHECK_FALSE(k24.is_minimal);
    CHECK(k24.tau.value == make_rational(1, 2));
    REQUIRE(k24.counterexample_edge.has_value());
    multigraph weakened = without_edge(complete_bipartite_graph(2, 4),
                                       static_cast<std::size_t>(*k24.counterexample_edge));
    CHECK_FALSE(toughness(weakened) < k24.tau);

    CHECK_FALSE(is_minimally_tough(complete_graph(3)).is_minimal);
    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_FALSE(is_minimally_tough(split).is_minimal);
}

TEST_CASE("deleting any edge of a minimal graph lowers the toughness") {
    multigraph p3 = path_graph(3);
    minimality_verdict v = is_minimally_tough(p3);
    CHECK(v.is_minimal);
    for (std::size_t id = 0; id < p3.edge_count(); ++id)
        CHECK(toughness(without_edge(p3, id)) < v.tau);
}

// ==================== CONNECTIVITY ====================

TEST_CASE("vertex connectivity matches known values") {
    CHECK(vertex_connectivity(path_graph(3)) == 1);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(complete_bipartite_graph(2, 3)) == 2);
    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(vertex_connectivity(split) == 0);
}

// ==================== LIMITS ====================

TEST_CASE("empty input and the vertex cap raise errors") {
    CHECK_THROWS_AS(toughness(multigraph{}), domain_error);
    CHECK_THROWS_AS(toughness(path_graph(25)), capacity_error);
    CHECK(toughness(path_graph(24)).finite());
}
