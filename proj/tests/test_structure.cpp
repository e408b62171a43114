#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <variant>

#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"
#include "sptough/parser.hpp"
#include "sptough/sp_tree.hpp"
#include "sptough/structure.hpp"
#include "sptough/toughness.hpp"

using namespace sptough;

namespace {

sp_tree tree_of(const char* text) { return canonicalize(parse(text)); }

multigraph graph_of(const char* text) { return realize(tree_of(text)).graph; }

}  // namespace

// ==================== SUBSTRUCTURE MATCHING ====================

TEST_CASE("pattern kinds normalize their parameters") {
    CHECK(substructure_kind::rr(1, 3) == substructure_kind::rr(3, 1));
    CHECK_THROWS_AS(substructure_kind::r(1), domain_error);
    CHECK_THROWS_AS(substructure_kind::bracelet(0), domain_error);

    // rr(1,1) plays the role of p2: both match the same window of S(e,e)
    sp_tree p3 = canonicalize(parse("S(e,e)"));
    CHECK(match_substructures(p3, substructure_kind::p2()).size() == 1);
    CHECK_FALSE(match_substructures(p3, substructure_kind::rr(1, 1)).empty());
}

TEST_CASE("matcher finds the textbook occurrences") {
    // the four cycle is R2: one r(2) occurrence at the root
    sp_tree r2 = tree_of("P(S(e,e),S(e,e))");
    CHECK(match_substructures(r2, substructure_kind::r(2)).size() == 1);
    CHECK(match_substructures(r2, substructure_kind::p2()).size() == 2);

    // K_{2,3} is R3, which also hosts three r(2) sub-patterns
    sp_tree r3 = tree_of("P(S(e,e),S(e,e),S(e,e))");
    CHECK(match_substructures(r3, substructure_kind::r(3)).size() == 1);
    CHECK(match_substructures(r3, substructure_kind::r(2)).size() == 3);

    // a triangle hosts Q2
    sp_tree q2 = tree_of("P(S(e,e),e)");
    CHECK(match_substructures(q2, substructure_kind::q2()).size() == 1);

    // an R2 with an adjacent edge on either side forms rr(2,1) twice
    sp_tree chain = tree_of("S(e,P(S(e,e),S(e,e)),e)");
    CHECK(match_substructures(chain, substructure_kind::rr(2, 1)).size() == 2);
    CHECK(match_substructures(chain, substructure_kind::bracelet(1)).size() == 1);
    CHECK(match_substructures(chain, substructure_kind::pearl()).size() == 1);
    CHECK(match_substructures(chain, substructure_kind::necklace()).size() == 1);

    // series windows match in either orientation
    sp_tree mixed = tree_of("S(e,P(S(e,e),S(e,e)),P(S(e,e),S(e,e),S(e,e)),e)");
    CHECK(match_substructures(mixed, substructure_kind::rr(3, 2)).size() == 1);
    CHECK(match_substructures(mixed, substructure_kind::rr(2, 1)).size() == 1);
    CHECK(match_substructures(mixed, substructure_kind::rr(3, 1)).size() == 1);
}

TEST_CASE("occurrences report terminals and middles in graph numbering") {
    sp_tree r2 = tree_of("P(S(e,e),S(e,e))");
    labeled_graph lg = realize(r2);
    auto occs = match_substructures(r2, substructure_kind::r(2));
    REQUIRE(occs.size() == 1);
    const occurrence& occ = occs[0];
    REQUIRE(occ.graph_vertices.size() == 4);
    CHECK(std::min(occ.graph_vertices[0], occ.graph_vertices[1]) == lg.s);
    CHECK(std::max(occ.graph_vertices[0], occ.graph_vertices[1]) == lg.t);
    // middles are the two remaining vertices, ascending
    CHECK(occ.graph_vertices[2] < occ.graph_vertices[3]);
    CHECK(occ.graph_vertices[2] > 1);
}

TEST_CASE("matching requires a canonical tree") {
    CHECK_THROWS_AS(match_substructures(parse("S(S(e,e),e)"), substructure_kind::p2()),
                    domain_error);
}

// ==================== JUMP AND LEAP EDGES ====================

TEST_CASE("leaf classification separates leaps from jumps") {
    // lone parallel leaf beside one series child, parent is the root: leap
    sp_tree leap = tree_of("P(S(e,e),e)");
    CHECK(leap_edges(leap).size() == 1);
    CHECK(jump_edges(leap).empty());

    // root parallel node with three children: the leaf jumps
    sp_tree jump = tree_of("P(S(e,e),S(e,e),e)");
    CHECK(jump_edges(jump).size() == 1);
    CHECK(leap_edges(jump).empty());

    // non-root parallel parent: always a jump
    sp_tree nested = tree_of("S(e,P(S(e,e),e),e)");
    CHECK(jump_edges(nested).size() == 1);
    CHECK(leap_edges(nested).empty());

    // doubled edge: both leaves leap
    sp_tree doubled = tree_of("P(e,e)");
    CHECK(leap_edges(doubled).size() == 2);

    // no parallel-parented leaf at all
    CHECK(jump_edges(tree_of("S(e,e,e)")).empty());
    CHECK(leap_edges(tree_of("S(e,e,e)")).empty());
}

// ==================== REDUCTION ====================

TEST_CASE("reduce collapses long induced paths to length two") {
    CHECK(isomorphic(reduce(path_graph(7)), path_graph(3)));
    CHECK(isomorphic(reduce(cycle_graph(6)), cycle_graph(4)));
    CHECK(isomorphic(reduce(cycle_graph(4)), cycle_graph(4)));
    CHECK(isomorphic(reduce(complete_graph(3)), complete_graph(3)));
    CHECK(reduction_steps(path_graph(3)).empty());
    CHECK_FALSE(reduction_steps(path_graph(4)).empty());
}

TEST_CASE("reduce preserves toughness below one") {
    multigraph chain = graph_of("S(e,P(S(e,e,e),S(e,e)),P(S(e,e),S(e,e,e)),e)");
    toughness_value before = toughness(chain);
    multigraph reduced = reduce(chain);
    CHECK(toughness(reduced) == before);
    CHECK(is_minimally_tough(reduced).is_minimal == is_minimally_tough(chain).is_minimal);
}

TEST_CASE("reduce rejects multigraphs and disconnected input") {
    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK_THROWS_AS(reduce(doubled), domain_error);
    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(reduce(split), domain_error);
}

// ==================== SHAPE TESTS ====================

TEST_CASE("is_cycle accepts exactly the cycles") {
    CHECK(is_cycle(cycle_graph(3)));
    CHECK(is_cycle(cycle_graph(8)));
    CHECK_FALSE(is_cycle(path_graph(4)));
    CHECK_FALSE(is_cycle(complete_graph(4)));
    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK_FALSE(is_cycle(doubled));
}

TEST_CASE("is_pearl_chain decomposes chains and rejects everything else") {
    auto p3 = is_pearl_chain(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == pearl_chain{{true, 0, 0}, {true, 0, 0}});

    // edge, pearl with arms 2 and 3, edge
    multigraph chain = graph_of("S(e,P(S(e,e),S(e,e,e)),e)");
    auto decomposed = is_pearl_chain(chain);
    REQUIRE(decomposed.has_value());
    REQUIRE(decomposed->size() == 3);
    CHECK((*decomposed)[0].edge);
    CHECK_FALSE((*decomposed)[1].edge);
    CHECK((*decomposed)[1].arm_a + (*decomposed)[1].arm_b == 5);
    CHECK((*decomposed)[2].edge);

    CHECK_FALSE(is_pearl_chain(cycle_graph(4)).has_value());
    CHECK_FALSE(is_pearl_chain(path_graph(2)).has_value());
    CHECK_FALSE(is_pearl_chain(complete_bipartite_graph(2, 3)).has_value());
    // chain interrupted by a pearl at the end
    CHECK_FALSE(is_pearl_chain(graph_of("S(e,P(S(e,e),S(e,e)))")).has_value());
}

// ==================== CLASSIFIER ====================

TEST_CASE("classifier verdicts match the characterization") {
    classification_report p3 = classify(path_graph(3));
    CHECK(p3.result == verdict::minimally_tough);
    CHECK(p3.tau.value == make_rational(1, 2));
    CHECK(std::holds_alternative<pearl_chain>(p3.evidence));

    classification_report c7 = classify(cycle_graph(7));
    CHECK(c7.result == verdict::minimally_tough);
    const auto* cert = std::get_if<cycle_certificate>(&c7.evidence);
    REQUIRE(cert != nullptr);
    CHECK(cert->length == 7);

    classification_report k23 = classify(complete_bipartite_graph(2, 3));
    CHECK(k23.result == verdict::minimally_tough);
    CHECK(k23.tau.value == make_rational(2, 3));

    classification_report k24 = classify(complete_bipartite_graph(2, 4));
    CHECK(k24.result == verdict::not_minimally_tough);
    const auto* occ = std::get_if<occurrence>(&k24.evidence);
    REQUIRE(occ != nullptr);
    CHECK(occ->kind == substructure_kind::r(4));

    classification_report q2 = classify(graph_of("S(e,P(e,S(e,e)),e)"));
    CHECK(q2.result == verdict::not_minimally_tough);
    CHECK(q2.tau.value == make_rational(1, 2));

    classification_report low = classify(graph_of("S(e,P(S(e,e),S(e,e),S(e,e)),e)"));
    CHECK(low.result == verdict::out_of_scope);
    CHECK(low.tau.value == make_rational(2, 5));

    CHECK(classify(complete_graph(3)).result == verdict::not_applicable);
    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK(classify(doubled).result == verdict::not_applicable);

    CHECK_THROWS_AS(classify(multigraph{}), domain_error);
    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_THROWS_AS(classify(split), domain_error);
}

TEST_CASE("classifier explains non-minimal toughness-one graphs") {
    // two cycles sharing a path: toughness 1 but not a cycle
    multigraph theta = graph_of("P(S(e,e),S(e,e),e)");
    REQUIRE(toughness(theta).finite());
    if (toughness(theta).value == make_rational(1, 1)) {
        classification_report report = classify(theta);
        CHECK(report.result == verdict::not_minimally_tough);
    }

    multigraph k33_like = graph_of("P(S(e,P(S(e,e),S(e,e))),S(e,e))");
    classification_report report = classify(k33_like);
    CHECK(report.tau == toughness(k33_like));
}
