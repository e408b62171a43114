#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"

using namespace sptough;

// ==================== CONSTRUCTION ====================

TEST_CASE("add_edge inserts missing endpoints and keeps ids sorted") {
    multigraph g;
    g.add_edge(4, 2);
    g.add_edge(2, 0);
    CHECK(g.vertex_ids == std::vector<int>{0, 2, 4});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_vertex(4));
    CHECK_FALSE(g.has_vertex(1));
    CHECK(g.index_of(2) == 1);
}

TEST_CASE("parallel edges and loops are distinct edges") {
    multigraph g;
    int first = g.add_edge(0, 1);
    int second = g.add_edge(1, 0);
    int loop = g.add_edge(0, 0);
    CHECK(first == 0);
    CHECK(second == 1);
    CHECK(loop == 2);
    CHECK(g.has_parallel_edges());
    CHECK(g.has_loop());
    CHECK_FALSE(g.simple());
    CHECK(g.degree(0) == 4);  // two parallel ends plus a loop counted twice
    CHECK(g.degree(1) == 2);
}

TEST_CASE("factories build the expected shapes") {
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(complete_bipartite_graph(2, 3).vertex_count() == 5);
}

// ==================== COMPONENTS ====================

TEST_CASE("components counts pieces after removal") {
    multigraph c4 = cycle_graph(4);
    CHECK(components(c4, {}) == 1);
    CHECK(components(c4, {0}) == 1);
    CHECK(components(c4, {0, 2}) == 2);
    CHECK(components(c4, {0, 1, 2, 3}) == 0);
    CHECK_THROWS_AS(components(c4, {9}), domain_error);
}

TEST_CASE("component_sets lists sorted vertex sets by smallest member") {
    multigraph g;
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_vertex(5);
    auto sets = component_sets(g, {});
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == std::vector<int>{0, 1});
    CHECK(sets[1] == std::vector<int>{2, 3});
    CHECK(sets[2] == std::vector<int>{5});
}

TEST_CASE("loops never connect anything") {
    multigraph g;
    g.add_edge(0, 0);
    g.add_vertex(1);
    CHECK(components(g, {}) == 2);
}

// ==================== STRUCTURE TESTS ====================

TEST_CASE("underlying completeness ignores multiplicity") {
    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK(underlying_complete(doubled));
    CHECK(underlying_complete(complete_graph(4)));
    CHECK_FALSE(underlying_complete(path_graph(3)));
    CHECK(underlying_complete(complete_graph(1)));
}

TEST_CASE("without_edge and without_vertices leave the original untouched") {
    multigraph c4 = cycle_graph(4);
    multigraph p4 = without_edge(c4, 0);
    CHECK(p4.edge_count() == 3);
    CHECK(c4.edge_count() == 4);
    multigraph smaller = without_vertices(c4, {0});
    CHECK(smaller.vertex_count() == 3);
    CHECK(smaller.edge_count() == 2);
}

// ==================== ISOMORPHISM ====================

TEST_CASE("isomorphism respects shape, multiplicity, and terminals") {
    CHECK(isomorphic(cycle_graph(4), cycle_graph(4)));
    CHECK_FALSE(isomorphic(cycle_graph(4), path_graph(4)));

    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK_FALSE(isomorphic(doubled, path_graph(2)));

    // C4 with opposite terminals is not terminal-isomorphic to C4 with
    // adjacent terminals
    multigraph c4 = cycle_graph(4);
    CHECK(isomorphic_with_terminals(c4, 0, 2, c4, 1, 3));
    CHECK_FALSE(isomorphic_with_terminals(c4, 0, 2, c4, 0, 1));
    // terminals form an unordered pair
    CHECK(isomorphic_with_terminals(c4, 0, 2, c4, 2, 0));
}
