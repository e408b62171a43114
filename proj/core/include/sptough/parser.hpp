#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sptough/multigraph.hpp"
#include "sptough/sp_tree.hpp"

namespace sptough {

// Expression syntax for decomposition trees:
//   expr := 'e' | 'S' '(' expr ',' expr [',' expr ...] ')'
//               | 'P' '(' expr ',' expr [',' expr ...] ')'
// Whitespace may appear between tokens. The parsed tree keeps the written
// structure; it is not canonicalized. Syntax and arity problems raise
// parse_error carrying a 1-based line and column.
sp_tree parse(const std::string& text);

// Inverse of parse up to whitespace: emits the exact stored structure.
std::string serialize(const sp_tree& t);

// Edge list reader: one "u v" pair of non-negative integers per line,
// '#' starts a comment, blank lines are skipped. Repeated pairs become
// parallel edges and "u u" becomes a loop. Malformed lines raise parse_error.
multigraph read_edge_list(const std::string& text);

struct dot_options {
    std::optional<std::pair<int, int>> terminals;  // drawn with a double border
    std::vector<int> tough_set;                    // filled vertices
    std::vector<int> highlight_edges;              // bold red edges, by edge id
};

// Graphviz export in the undirected dialect, one statement per edge so
// parallel edges and loops stay visible.
std::string to_dot(const multigraph& g, const dot_options& options = {});

}  // namespace sptough
