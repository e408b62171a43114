#include "sptough/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sptough/errors.hpp"
#include "sptough/parser.hpp"

namespace sptough {

namespace {

constexpr int max_supported_leaves = 12;

// Trees are generated as expression strings in oriented canonical form
// (parallel children sorted by their oriented encoding). Orientation matters
// while composing: a series child lists its parts left to right, so both
// orientations of an asymmetric subtree occur as building blocks. The flip
// symmetry is quotiented only at top level, via encode().
struct pools {
    // by leaf count: oriented series-rooted / parallel-rooted expressions
    std::vector<std::vector<std::string>> series;
    std::vector<std::vector<std::string>> parallel;
};

// Ordered child sequences (leaf or parallel-rooted) with the given total leaf
// count; used as series children. seq_out collects full expressions.
void series_sequences(const pools& p, int total, std::string prefix, int parts,
                      std::vector<std::string>& out) {
    for (int first = 1; first <= total; ++first) {
        bool last = first == total;
        auto append = [&](const std::string& child) {
            if (last) {
                if (parts + 1 >= 2) out.push_back(prefix + child);
            } else {
                series_sequences(p, total - first, prefix + child + ",", parts + 1,
                                 out);
            }
        };
        if (first == 1) append("e");
        for (const std::string& child : p.parallel[static_cast<std::size_t>(first)])
            append(child);
    }
}

// Multisets of children (leaf or series-rooted) with the given total leaf
// count, chosen non-decreasing over the pool: pool index 0 is the leaf, then
// all series expressions by leaf count then string. leaf_budget caps how many
// leaf children may appear (1 in simple mode, unlimited otherwise).
struct parallel_pool_entry {
    int leaves;
    const std::string* expr;  // null means the single leaf "e"
};

void parallel_multisets(const std::vector<parallel_pool_entry>& pool,
                        std::size_t from, int total, int leaf_budget,
                        std::vector<std::string>& chosen,
                        std::vector<std::vector<std::string>>& out) {
    if (total == 0) {
        if (chosen.size() >= 2) out.push_back(chosen);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        const auto& entry = pool[i];
        if (entry.leaves > total) continue;
        if (!entry.expr && leaf_budget == 0) continue;
        chosen.push_back(entry.expr ? *entry.expr : "e");
        parallel_multisets(pool, i, total - entry.leaves,
                           entry.expr ? leaf_budget : leaf_budget - 1, chosen, out);
        chosen.pop_back();
    }
}

pools build_pools(int max_leaves, bool simple_only) {
    pools p;
    p.series.assign(static_cast<std::size_t>(max_leaves) + 1, {});
    p.parallel.assign(static_cast<std::size_t>(max_leaves) + 1, {});
    for (int l = 2; l <= max_leaves; ++l) {
        // series-rooted with l leaves
        std::vector<std::string> bodies;
        series_sequences(p, l, "", 0, bodies);
        for (std::string& b : bodies)
            p.series[static_cast<std::size_t>(l)].push_back("S(" + b + ")");

        // parallel-rooted with l leaves
        std::vector<parallel_pool_entry> pool;
        pool.push_back({1, nullptr});
        for (int part = 2; part < l; ++part)
            for (const std::string& s : p.series[static_cast<std::size_t>(part)])
                pool.push_back({part, &s});
        std::vector<std::string> chosen;
        std::vector<std::vector<std::string>> sets;
        parallel_multisets(pool, 0, l, simple_only ? 1 : l, chosen, sets);
        for (auto& children : sets) {
            std::sort(children.begin(), children.end());
            std::string expr = "P(";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) expr += ',';
                expr += children[i];
            }
            expr += ')';
            p.parallel[static_cast<std::size_t>(l)].push_back(std::move(expr));
        }
    }
    return p;
}

}  // namespace

void for_each_tree(const enumeration_config& config,
                   const std::function<void(const sp_tree&)>& visit) {
    if (config.max_leaves > max_supported_leaves)
        throw capacity_error("enumeration supports at most " +
                             std::to_string(max_supported_leaves) + " leaves");
    if (config.max_leaves < 1) return;

    pools p = build_pools(config.max_leaves, config.simple_only);
    for (int l = 1; l <= config.max_leaves; ++l) {
        // one representative per flip class, ordered by encode
        std::map<std::string, sp_tree> classes;
        auto consider = [&](const std::string& expr) {
            sp_tree t = parse(expr);
            std::string key = encode(t);
            classes.emplace(std::move(key), std::move(t));
        };
        if (l == 1) consider("e");
        for (const std::string& expr : p.series[static_cast<std::size_t>(l)])
            consider(expr);
        for (const std::string& expr : p.parallel[static_cast<std::size_t>(l)])
            consider(expr);
        for (const auto& [key, tree] : classes) visit(tree);
    }
}

std::vector<sp_tree> enum_trees(const enumeration_config& config) {
    std::vector<sp_tree> out;
    for_each_tree(config, [&](const sp_tree& t) { out.push_back(t); });
    return out;
}

void for_each_realization(
    const enumeration_config& config,
    const std::function<void(const sp_tree&, const labeled_graph&)>& visit) {
    for_each_tree(config, [&](const sp_tree& t) {
        labeled_graph lg = realize(t);
        if (config.max_vertices &&
            static_cast<int>(lg.graph.vertex_count()) > *config.max_vertices)
            return;
        visit(t, lg);
    });
}

}  // namespace sptough
