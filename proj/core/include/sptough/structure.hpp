#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sptough/multigraph.hpp"
#include "sptough/sp_tree.hpp"
#include "sptough/toughness.hpp"

namespace sptough {

// ==================== SUBSTRUCTURE PATTERNS ====================

// Tree patterns matched inside canonical decomposition trees. A pattern
// occupies a host node: parallel-rooted patterns pick a subset of the host's
// children (extra children may remain), series-rooted patterns occupy a run
// of consecutive children (either orientation), and everything below the
// pattern root must match exactly. The building blocks:
//   p2          two consecutive leaf children of a series node
//   q2          a leaf child and an exact p2 node under one parallel node
//   r(i)        i >= 2 children of a parallel node, each an exact p2 node
//   rr(i, j)    adjacent series children matching exact r(i) and r(j),
//               where r(1) means a leaf; stored with i >= j
//   bracelet(l) l >= 1 consecutive series children, each an exact r(2) node
//   pearl       two all-leaf series children (>= 2 leaves each) of a
//               parallel node
//   necklace    the whole tree: a series root whose children are leaves or
//               exact r(2) nodes, with leaf first and last children
struct substructure_kind {
    enum class family { p2, q2, r, rr, bracelet, pearl, necklace };
    family fam = family::p2;
    int i = 0;
    int j = 0;

    static substructure_kind p2() { return {family::p2, 0, 0}; }
    static substructure_kind q2() { return {family::q2, 0, 0}; }
    static substructure_kind r(int i);
    static substructure_kind rr(int i, int j);
    static substructure_kind bracelet(int length);
    static substructure_kind pearl() { return {family::pearl, 0, 0}; }
    static substructure_kind necklace() { return {family::necklace, 0, 0}; }

    friend bool operator==(const substructure_kind&, const substructure_kind&) = default;
};

std::string to_string(const substructure_kind& k);

// One match. graph_vertices[0] and [1] are the terminals the occurrence
// spans in realize(tree) numbering; the remaining entries are its interior
// vertices in ascending order. For rr patterns the first terminal is the
// outer terminal on the r(i) side.
struct occurrence {
    substructure_kind kind;
    int tree_node = -1;
    std::vector<int> graph_vertices;
};

// All occurrences of the pattern, ordered by host node id, then position.
// The tree must be canonical.
std::vector<occurrence> match_substructures(const sp_tree& t,
                                            const substructure_kind& kind);

// ==================== LEAF CLASSIFICATION ====================

// Every leaf under a parallel parent is either a leap edge or a jump edge.
// A leap edge's parallel parent is the root and the leaf has exactly one
// sibling; every other parallel-parented leaf is a jump edge. Returns leaf
// node ids ascending; the tree must be canonical.
std::vector<int> jump_edges(const sp_tree& t);
std::vector<int> leap_edges(const sp_tree& t);

// ==================== PATH REDUCTION ====================

// Replaces an induced path with at least two interior vertices (all of
// degree two, endpoints distinct and non-adjacent) by a path of length two,
// repeatedly, until no such path remains. Deterministic: each round picks
// the candidate with the lexicographically least interior vertex set and
// keeps the smallest interior id as the surviving middle vertex. Requires a
// simple connected graph.
multigraph reduce(const multigraph& g);

// Every graph reachable by applying one reduction step, in the same
// deterministic candidate order. Empty exactly when g is fully reduced.
std::vector<multigraph> reduction_steps(const multigraph& g);

// ==================== SHAPE TESTS ====================

// Connected, simple, at least three vertices, every degree two.
bool is_cycle(const multigraph& g);

// A pearl is two internally disjoint paths of length >= 2 between the same
// endpoints. A pearl chain is a series join of single edges and pearls whose
// first and last members are edges. The decomposition lists the members in
// chain order; arm lengths are edge counts of a pearl's two paths.
struct chain_component {
    bool edge = true;
    int arm_a = 0;
    int arm_b = 0;

    friend bool operator==(const chain_component&, const chain_component&) = default;
};
using pearl_chain = std::vector<chain_component>;

// Tries every terminal pair; absent when no pair yields a chain-shaped
// decomposition. Requires a simple connected graph.
std::optional<pearl_chain> is_pearl_chain(const multigraph& g);

// ==================== CLASSIFIER ====================

struct cycle_certificate {
    int length = 0;
};
struct jump_edge_evidence {
    int leaf_node = -1;  // node id in the reported tree
    int edge_id = -1;    // edge id in the input graph
};
struct non_decreasing_edge {
    int edge_id = -1;  // deleting it does not lower the toughness
};

using classification_evidence =
    std::variant<std::monostate, cycle_certificate, jump_edge_evidence,
                 pearl_chain, occurrence, non_decreasing_edge>;

enum class verdict { minimally_tough, not_minimally_tough, out_of_scope, not_applicable };

struct classification_report {
    verdict result = verdict::not_applicable;
    toughness_value tau;
    std::string reason;
    classification_evidence evidence;
    std::optional<sp_tree> tree;                     // decomposition used
    std::optional<std::pair<int, int>> terminals;    // its terminals in g
};

// Structural minimal-toughness decision for series-parallel graphs:
//   - multigraphs and complete graphs are out of the theory: not_applicable
//   - toughness 1: minimally tough exactly for cycles
//   - toughness strictly between 1/2 and 1: minimally tough exactly when the
//     decomposition tree has no jump edges
//   - toughness 1/2: minimally tough exactly for pearl chains
//   - toughness below 1/2: out_of_scope
// Graphs that are not series-parallel raise domain_error (disconnected input
// included). Every verdict carries the exact toughness and evidence.
classification_report classify(const multigraph& g);

}  // namespace sptough
