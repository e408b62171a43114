#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sptough/sp_tree.hpp"

namespace sptough {

struct enumeration_config {
    int max_leaves = 6;
    bool simple_only = false;          // only trees realizing simple graphs
    std::optional<int> max_vertices{};  // realization filter
};

// Streams one canonical tree per encode class: every two-terminal graph with
// up to max_leaves edges appears exactly once up to isomorphism fixing the
// terminal pair as a set. Trees come grouped by leaf count ascending and
// sorted by encode within a group. simple_only drops trees with a parallel
// node owning two leaf children (the only source of parallel edges).
// max_leaves beyond 12 raises capacity_error; below 1 streams nothing.
void for_each_tree(const enumeration_config& config,
                   const std::function<void(const sp_tree&)>& visit);

std::vector<sp_tree> enum_trees(const enumeration_config& config);

// Realizes every enumerated tree, skipping graphs with more than
// max_vertices vertices when the limit is set.
void for_each_realization(
    const enumeration_config& config,
    const std::function<void(const sp_tree&, const labeled_graph&)>& visit);

}  // namespace sptough
