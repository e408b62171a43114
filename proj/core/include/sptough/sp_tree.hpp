#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sptough/multigraph.hpp"

namespace sptough {

// Two-terminal series-parallel decomposition tree. Leaves stand for edges;
// a series node chains its children end to end, a parallel node glues them
// across the same terminal pair. Node ids index into `nodes`; every node is
// reachable from the root exactly once.
enum class node_kind { leaf, series, parallel };

struct tree_node {
    node_kind kind = node_kind::leaf;
    std::vector<int> children;
};

struct sp_tree {
    std::vector<tree_node> nodes;
    int root = -1;

    int add_leaf() {
        nodes.push_back({node_kind::leaf, {}});
        return static_cast<int>(nodes.size()) - 1;
    }
    int add_node(node_kind kind, std::vector<int> children) {
        nodes.push_back({kind, std::move(children)});
        return static_cast<int>(nodes.size()) - 1;
    }
    const tree_node& node(int id) const;

    // Structural equality: same shape, kinds and child order, regardless of
    // node numbering.
    friend bool operator==(const sp_tree& a, const sp_tree& b);
};

// Throws structural_error unless the tree is well formed: valid root, every
// internal node with at least two children, leaves childless, every node
// reachable exactly once.
void validate(const sp_tree& t);

int leaf_count(const sp_tree& t);

// Canonical form: no series child of a series node, no parallel child of a
// parallel node, parallel children sorted by their oriented encoding. The
// result is a fresh compactly numbered tree realizing an isomorphic graph.
sp_tree canonicalize(const sp_tree& t);
bool is_canonical(const sp_tree& t);

// The same tree read from the opposite terminal: child order of every series
// node reversed, recursively. Realizes the graph with s and t swapped.
sp_tree reversed(const sp_tree& t);

// Oriented fingerprint: leaf "e", series "S(...)" joining children in order,
// parallel "P(...)" joining child strings sorted. Defined for any valid tree.
std::string oriented_encode(const sp_tree& t);

// Orientation-free fingerprint of a canonical tree: the smaller of the two
// oriented encodings of the tree and its reversal. Two canonical trees encode
// equally exactly when they realize isomorphic graphs with terminals fixed up
// to swapping s and t. Non-canonical input raises domain_error.
std::string encode(const sp_tree& t);

// A realized tree: the multigraph, its terminals, and which edge each leaf
// produced. Vertices are numbered deterministically with s = 0 and t = 1;
// edge ids follow the pre-order of leaves.
struct labeled_graph {
    multigraph graph;
    int s = 0;
    int t = 1;
    std::map<int, int> leaf_to_edge;
};

labeled_graph realize(const sp_tree& t);

// realize plus the terminal pair every tree node spans in the realization.
struct realization {
    labeled_graph labeled;
    std::map<int, std::pair<int, int>> node_span;
};

realization realize_with_spans(const sp_tree& t);

// Series-parallel recognition with prescribed terminals. Returns the
// canonical tree realizing g between s and t, or nothing when g is not
// two-terminal series-parallel for that pair (loops included). Disconnected
// input raises disconnected_error; unknown or equal terminals raise
// domain_error.
std::optional<sp_tree> recognize(const multigraph& g, int s, int t);

// Recognition that also reports which input edge each leaf stands for.
struct recognition {
    sp_tree tree;
    std::map<int, int> leaf_to_input_edge;
};

std::optional<recognition> recognize_with_edges(const multigraph& g, int s, int t);

}  // namespace sptough
