#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sptough {

// Undirected multigraph over explicit small integer vertex ids. Vertex ids
// stay sorted and unique; edge ids are positions in `edges`. Loops are edges
// with both endpoints equal, parallel edges are repeated pairs.
struct multigraph {
    std::vector<int> vertex_ids;
    std::vector<std::pair<int, int>> edges;

    void add_vertex(int v);
    int add_edge(int a, int b);  // inserts missing endpoints, returns edge id

    bool has_vertex(int v) const;
    std::size_t index_of(int v) const;  // position in vertex_ids, throws if absent

    std::size_t vertex_count() const { return vertex_ids.size(); }
    std::size_t edge_count() const { return edges.size(); }

    int degree(int v) const;  // loops contribute 2
    bool has_loop() const;
    bool has_parallel_edges() const;
    bool simple() const { return !has_loop() && !has_parallel_edges(); }
};

// Number of connected components of g - removed. Loops never affect
// connectivity. Removing every vertex leaves 0 components. Vertices in
// `removed` must exist in g.
int components(const multigraph& g, const std::vector<int>& removed);

// Vertex sets of the components of g - removed, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<int>> component_sets(const multigraph& g,
                                             const std::vector<int>& removed);

// True when every pair of distinct vertices is adjacent (multiplicities and
// loops ignored). Graphs with fewer than two vertices count as complete.
bool underlying_complete(const multigraph& g);

multigraph without_edge(const multigraph& g, std::size_t edge_id);
multigraph without_vertices(const multigraph& g, const std::vector<int>& removed);

// Brute-force isomorphism, intended for small instances (at most 12 vertices
// or so). Multiplicities and loops must match under the mapping. The terminal
// variant additionally requires {sa, ta} to map onto {sb, tb} as a set.
bool isomorphic(const multigraph& a, const multigraph& b);
bool isomorphic_with_terminals(const multigraph& a, int sa, int ta,
                               const multigraph& b, int sb, int tb);

multigraph path_graph(int n);
multigraph cycle_graph(int n);
multigraph complete_graph(int n);
multigraph complete_bipartite_graph(int a, int b);

}  // namespace sptough
