#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"
#include "sptough/parser.hpp"
#include "sptough/sp_tree.hpp"

using namespace sptough;

// ==================== VALIDATION ====================

TEST_CASE("validate rejects malformed trees") {
    sp_tree empty;
    CHECK_THROWS_AS(validate(empty), structural_error);

    sp_tree unary;
    int leaf = unary.add_leaf();
    unary.root = unary.add_node(node_kind::series, {leaf});
    CHECK_THROWS_AS(validate(unary), structural_error);

    sp_tree shared;
    int l = shared.add_leaf();
    shared.root = shared.add_node(node_kind::parallel, {l, l});
    CHECK_THROWS_AS(validate(shared), structural_error);

    sp_tree fine = parse("P(S(e,e),e)");
    CHECK_NOTHROW(validate(fine));
    CHECK(leaf_count(fine) == 3);
}

// ==================== CANONICAL FORM ====================

TEST_CASE("canonicalize flattens nesting and sorts parallel children") {
    CHECK(canonicalize(parse("S(S(e,e),e)")) == parse("S(e,e,e)"));
    CHECK(canonicalize(parse("P(P(e,e),e)")) == parse("P(e,e,e)"));
    CHECK(canonicalize(parse("P(S(e,e),e)")) == parse("P(S(e,e),e)"));
    CHECK(canonicalize(parse("P(e,S(e,e))")) == parse("P(S(e,e),e)"));

    CHECK_FALSE(is_canonical(parse("S(S(e,e),e)")));
    CHECK_FALSE(is_canonical(parse("P(e,S(e,e))")));
    CHECK(is_canonical(parse("P(S(e,e),e)")));
    CHECK(is_canonical(parse("e")));
}

TEST_CASE("canonicalize preserves the realized graph") {
    sp_tree t = parse("S(P(e,S(e,e)),S(e,P(e,e)))");
    sp_tree c = canonicalize(t);
    CHECK(is_canonical(c));
    labeled_graph before = realize(t);
    labeled_graph after = realize(c);
    CHECK(isomorphic_with_terminals(before.graph, before.s, before.t, after.graph, after.s,
                                    after.t));
}

// ==================== ORIENTATION ====================

TEST_CASE("reversal flips series order recursively") {
    sp_tree t = parse("S(e,P(e,S(e,e)))");
    CHECK(reversed(t) == parse("S(P(e,S(e,e)),e)"));
    CHECK(reversed(reversed(t)) == t);
}

TEST_CASE("encode quotients orientation but oriented_encode does not") {
    sp_tree left = canonicalize(parse("S(e,P(S(e,e),S(e,e,e)))"));
    sp_tree right = canonicalize(parse("S(P(S(e,e),S(e,e,e)),e)"));
    CHECK(oriented_encode(left) != oriented_encode(right));
    CHECK(encode(left) == encode(right));
    CHECK(encode(left) == std::min(oriented_encode(left), oriented_encode(right)));
    CHECK_THROWS_AS(encode(parse("S(S(e,e),e)")), domain_error);
}

TEST_CASE("series child order is not quotiented away") {
    // swapping interior series children changes the terminal degrees, so the
    // trees must encode differently
    sp_tree a = canonicalize(parse("S(e,e,P(e,e))"));
    sp_tree b = canonicalize(parse("S(e,P(e,e),e)"));
    CHECK(encode(a) != encode(b));
    labeled_graph ga = realize(a);
    labeled_graph gb = realize(b);
    CHECK_FALSE(
        isomorphic_with_terminals(ga.graph, ga.s, ga.t, gb.graph, gb.s, gb.t));
}

// ==================== REALIZATION ====================

TEST_CASE("realize numbers terminals first and tracks leaf edges") {
    labeled_graph lg = realize(parse("S(e,e)"));
    CHECK(lg.s == 0);
    CHECK(lg.t == 1);
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 2);
    CHECK(isomorphic(lg.graph, path_graph(3)));
    CHECK(lg.leaf_to_edge.size() == 2);

    labeled_graph r2 = realize(parse("P(S(e,e),S(e,e))"));
    CHECK(isomorphic(r2.graph, cycle_graph(4)));

    labeled_graph doubled = realize(parse("P(e,e)"));
    CHECK(doubled.graph.vertex_count() == 2);
    CHECK(doubled.graph.has_parallel_edges());
}

TEST_CASE("realize_with_spans reports the terminals of every node") {
    sp_tree t = parse("S(e,e)");
    realization r = realize_with_spans(t);
    auto root_span = r.node_span.at(t.root);
    CHECK(root_span == std::make_pair(0, 1));
    for (const auto& [node, span] : r.node_span) {
        CHECK(r.labeled.graph.has_vertex(span.first));
        CHECK(r.labeled.graph.has_vertex(span.second));
    }
}

// ==================== RECOGNITION ====================

TEST_CASE("recognize inverts realize") {
    for (const char* text :
         {"e", "S(e,e)", "P(e,e)", "P(S(e,e),S(e,e))", "S(e,P(S(e,e),e),e)"}) {
        sp_tree t = canonicalize(parse(text));
        labeled_graph lg = realize(t);
        auto back = recognize(lg.graph, lg.s, lg.t);
        REQUIRE(back.has_value());
        CHECK(is_canonical(*back));
        CHECK(encode(*back) == encode(t));
    }
}

TEST_CASE("recognize is orientation free") {
    labeled_graph lg = realize(canonicalize(parse("S(e,P(e,S(e,e)))")));
    auto forward = recognize(lg.graph, lg.s, lg.t);
    auto backward = recognize(lg.graph, lg.t, lg.s);
    REQUIRE(forward.has_value());
    REQUIRE(backward.has_value());
    CHECK(encode(*forward) == encode(*backward));
}

TEST_CASE("recognize rejects what is not series-parallel for the pair") {
    multigraph k4 = complete_graph(4);
    CHECK_FALSE(recognize(k4, 0, 1).has_value());

    // C4 decomposes for opposite and adjacent pairs alike
    multigraph c4 = cycle_graph(4);
    CHECK(recognize(c4, 0, 2).has_value());
    CHECK(recognize(c4, 0, 1).has_value());

    CHECK_THROWS_AS(recognize(c4, 0, 0), domain_error);
    CHECK_THROWS_AS(recognize(c4, 0, 9), domain_error);

    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(recognize(split, 0, 3), disconnected_error);

    multigraph looped = path_graph(2);
    looped.add_edge(0, 0);
    CHECK_FALSE(recognize(looped, 0, 1).has_value());
}

TEST_CASE("recognize_with_edges maps leaves onto distinct input edges") {
    multigraph g = cycle_graph(4);
    auto found = recognize_with_edges(g, 0, 2);
    REQUIRE(found.has_value());
    std::vector<bool> used(g.edge_count(), false);
    int leaves = 0;
    for (std::size_t id = 0; id < found->tree.nodes.size(); ++id) {
        if (found->tree.nodes[id].kind != node_kind::leaf) continue;
        ++leaves;
        int edge = found->leaf_to_input_edge.at(static_cast<int>(id));
        REQUIRE(edge >= 0);
        REQUIRE(edge < static_cast<int>(g.edge_count()));
        CHECK_FALSE(used[static_cast<std::size_t>(edge)]);
        used[static_cast<std::size_t>(edge)] = true;
    }
    CHECK(leaves == 4);
}
