#include "sptough/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sptough/errors.hpp"

namespace sptough {

// ==================== SUBSTRUCTURE PATTERNS ====================

substructure_kind substructure_kind::r(int i) {
    if (i < 2) throw domain_error("r pattern needs i >= 2");
    return {family::r, i, 0};
}

substructure_kind substructure_kind::rr(int i, int j) {
    if (i < 1 || j < 1) throw domain_error("rr pattern needs i, j >= 1");
    if (i < j) std::swap(i, j);
    return {family::rr, i, j};
}

substructure_kind substructure_kind::bracelet(int length) {
    if (length < 1) throw domain_error("bracelet pattern needs length >= 1");
    return {family::bracelet, length, 0};
}

std::string to_string(const substructure_kind& k) {
    using family = substructure_kind::family;
    switch (k.fam) {
        case family::p2: return "P2";
        case family::q2: return "Q2";
        case family::r: return "R(" + std::to_string(k.i) + ")";
        case family::rr:
            return "RR(" + std::to_string(k.i) + "," + std::to_string(k.j) + ")";
        case family::bracelet: return "Bracelet(" + std::to_string(k.i) + ")";
        case family::pearl: return "Pearl";
        case family::necklace: return "Necklace";
    }
    return "?";
}

namespace {

std::vector<int> parent_map(const sp_tree& t) {
    std::vector<int> parent(t.nodes.size(), -1);
    for (std::size_t id = 0; id < t.nodes.size(); ++id)
        for (int c : t.nodes[id].children)
            parent[static_cast<std::size_t>(c)] = static_cast<int>(id);
    return parent;
}

bool is_leaf(const sp_tree& t, int id) { return t.node(id).kind == node_kind::leaf; }

// Exact S(e,e): a series node with exactly two leaf children.
bool is_exact_p2(const sp_tree& t, int id) {
    const tree_node& n = t.node(id);
    return n.kind == node_kind::series && n.children.size() == 2 &&
           is_leaf(t, n.children[0]) && is_leaf(t, n.children[1]);
}

// Exact r(i): a parallel node with exactly i children, each an exact p2.
bool is_exact_r(const sp_tree& t, int id, int i) {
    const tree_node& n = t.node(id);
    if (n.kind != node_kind::parallel) return false;
    if (static_cast<int>(n.children.size()) != i) return false;
    for (int c : n.children)
        if (!is_exact_p2(t, c)) return false;
    return true;
}

// Exact r(i) with the convention r(1) = leaf, as in rr components.
bool is_exact_r_or_leaf(const sp_tree& t, int id, int i) {
    if (i == 1) return is_leaf(t, id);
    return is_exact_r(t, id, i);
}

// All-leaf series node with at least min_leaves children: a pearl arm.
bool is_arm(const sp_tree& t, int id, int min_leaves) {
    const tree_node& n = t.node(id);
    if (n.kind != node_kind::series) return false;
    if (static_cast<int>(n.children.size()) < min_leaves) return false;
    for (int c : n.children)
        if (!is_leaf(t, c)) return false;
    return true;
}

void collect_span_vertices(const sp_tree& t,
                           const std::map<int, std::pair<int, int>>& spans,
                           int id, std::set<int>& out) {
    const auto& [a, b] = spans.at(id);
    out.insert(a);
    out.insert(b);
    for (int c : t.node(id).children) collect_span_vertices(t, spans, c, out);
}

// Interior vertices of the subtree at id: everything it realizes except its
// own two attachment points.
std::vector<int> subtree_interior(const sp_tree& t,
                                  const std::map<int, std::pair<int, int>>& spans,
                                  int id) {
    std::set<int> all;
    collect_span_vertices(t, spans, id, all);
    const auto& [a, b] = spans.at(id);
    all.erase(a);
    all.erase(b);
    return {all.begin(), all.end()};
}

struct match_context {
    const sp_tree* tree;
    std::map<int, std::pair<int, int>> spans;
    std::vector<occurrence>* out;
};

occurrence make_occurrence(const substructure_kind& kind, int node, int term_a,
                           int term_b, std::vector<int> interior) {
    occurrence occ;
    occ.kind = kind;
    occ.tree_node = node;
    occ.graph_vertices.push_back(term_a);
    occ.graph_vertices.push_back(term_b);
    std::sort(interior.begin(), interior.end());
    occ.graph_vertices.insert(occ.graph_vertices.end(), interior.begin(),
                              interior.end());
    return occ;
}

// The junction vertex of an exact p2 node.
int p2_middle(const match_context& ctx, int id) {
    return ctx.spans.at(ctx.tree->node(id).children[0]).second;
}

void match_p2(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::series) return;
    for (std::size_t k = 0; k + 1 < n.children.size(); ++k) {
        if (!is_leaf(*ctx.tree, n.children[k]) ||
            !is_leaf(*ctx.tree, n.children[k + 1]))
            continue;
        int a = ctx.spans.at(n.children[k]).first;
        int mid = ctx.spans.at(n.children[k]).second;
        int b = ctx.spans.at(n.children[k + 1]).second;
        ctx.out->push_back(make_occurrence(kind, id, a, b, {mid}));
    }
}

void match_q2(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::parallel) return;
    const auto& [a, b] = ctx.spans.at(id);
    for (int leaf_child : n.children) {
        if (!is_leaf(*ctx.tree, leaf_child)) continue;
        for (int p2_child : n.children) {
            if (!is_exact_p2(*ctx.tree, p2_child)) continue;
            ctx.out->push_back(make_occurrence(kind, id, a, b,
                                               {p2_middle(ctx, p2_child)}));
        }
    }
}

void match_r(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::parallel) return;
    std::vector<int> p2_children;
    for (int c : n.children)
        if (is_exact_p2(*ctx.tree, c)) p2_children.push_back(c);
    int want = kind.i;
    if (static_cast<int>(p2_children.size()) < want) return;
    const auto& [a, b] = ctx.spans.at(id);
    // lexicographic combinations over the p2 children
    std::vector<int> idx(static_cast<std::size_t>(want));
    for (int x = 0; x < want; ++x) idx[static_cast<std::size_t>(x)] = x;
    std::size_t m = p2_children.size();
    std::size_t k = static_cast<std::size_t>(want);
    while (true) {
        std::vector<int> mids;
        for (int x : idx) mids.push_back(p2_middle(ctx, p2_children[static_cast<std::size_t>(x)]));
        ctx.out->push_back(make_occurrence(kind, id, a, b, std::move(mids)));
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == static_cast<int>(m - k + pos - 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t x = pos; x < k; ++x) idx[x] = idx[x - 1] + 1;
    }
}

void match_rr(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::series) return;
    for (std::size_t k = 0; k + 1 < n.children.size(); ++k) {
        int left = n.children[k];
        int right = n.children[k + 1];
        int junction = ctx.spans.at(left).second;
        int outer_left = ctx.spans.at(left).first;
        int outer_right = ctx.spans.at(right).second;
        auto interior_of = [&](int child) {
            return subtree_interior(*ctx.tree, ctx.spans, child);
        };
        auto emit = [&](int term_first, int term_second) {
            std::vector<int> interior{junction};
            for (int v : interior_of(left)) interior.push_back(v);
            for (int v : interior_of(right)) interior.push_back(v);
            ctx.out->push_back(
                make_occurrence(kind, id, term_first, term_second, std::move(interior)));
        };
        bool forward = is_exact_r_or_leaf(*ctx.tree, left, kind.i) &&
                       is_exact_r_or_leaf(*ctx.tree, right, kind.j);
        if (forward) emit(outer_left, outer_right);
        if (kind.i != kind.j) {
            bool backward = is_exact_r_or_leaf(*ctx.tree, left, kind.j) &&
                            is_exact_r_or_leaf(*ctx.tree, right, kind.i);
            if (backward) emit(outer_right, outer_left);
        }
    }
}

void match_bracelet(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::series) return;
    std::size_t len = static_cast<std::size_t>(kind.i);
    if (n.children.size() < len) return;
    for (std::size_t k = 0; k + len <= n.children.size(); ++k) {
        bool all_r2 = true;
        for (std::size_t x = 0; x < len; ++x)
            if (!is_exact_r(*ctx.tree, n.children[k + x], 2)) {
                all_r2 = false;
                break;
            }
        if (!all_r2) continue;
        int a = ctx.spans.at(n.children[k]).first;
        int b = ctx.spans.at(n.children[k + len - 1]).second;
        std::vector<int> interior;
        for (std::size_t x = 0; x < len; ++x) {
            for (int v : subtree_interior(*ctx.tree, ctx.spans, n.children[k + x]))
                interior.push_back(v);
            if (x + 1 < len) interior.push_back(ctx.spans.at(n.children[k + x]).second);
        }
        ctx.out->push_back(make_occurrence(kind, id, a, b, std::move(interior)));
    }
}

void match_pearl(match_context& ctx, const substructure_kind& kind, int id) {
    const tree_node& n = ctx.tree->node(id);
    if (n.kind != node_kind::parallel) return;
    std::vector<int> arms;
    for (int c : n.children)
        if (is_arm(*ctx.tree, c, 2)) arms.push_back(c);
    const auto& [a, b] = ctx.spans.at(id);
    for (std::size_t x = 0; x < arms.size(); ++x) {
        for (std::size_t y = x + 1; y < arms.size(); ++y) {
            std::vector<int> interior;
            for (int v : subtree_interior(*ctx.tree, ctx.spans, arms[x]))
                interior.push_back(v);
            for (int v : subtree_interior(*ctx.tree, ctx.spans, arms[y]))
                interior.push_back(v);
            ctx.out->push_back(make_occurrence(kind, id, a, b, std::move(interior)));
        }
    }
}

void match_necklace(match_context& ctx, const substructure_kind& kind) {
    const sp_tree& t = *ctx.tree;
    const tree_node& root = t.node(t.root);
    if (root.kind != node_kind::series) return;
    if (!is_leaf(t, root.children.front()) || !is_leaf(t, root.children.back()))
        return;
    for (int c : root.children)
        if (!is_leaf(t, c) && !is_exact_r(t, c, 2)) return;
    const auto& [a, b] = ctx.spans.at(t.root);
    std::vector<int> interior;
    for (int v : subtree_interior(t, ctx.spans, t.root)) interior.push_back(v);
    ctx.out->push_back(make_occurrence(kind, t.root, a, b, std::move(interior)));
}

}  // namespace

std::vector<occurrence> match_substructures(const sp_tree& t,
                                            const substructure_kind& kind) {
    if (!is_canonical(t))
        throw domain_error("substructure matching requires a canonical tree");
    realization r = realize_with_spans(t);
    std::vector<occurrence> out;
    match_context ctx{&t, std::move(r.node_span), &out};

    using family = substructure_kind::family;
    if (kind.fam == family::necklace) {
        match_necklace(ctx, kind);
        return out;
    }
    for (std::size_t id = 0; id < t.nodes.size(); ++id) {
        int node = static_cast<int>(id);
        switch (kind.fam) {
            case family::p2: match_p2(ctx, kind, node); break;
            case family::q2: match_q2(ctx, kind, node); break;
            case family::r: match_r(ctx, kind, node); break;
            case family::rr: match_rr(ctx, kind, node); break;
            case family::bracelet: match_bracelet(ctx, kind, node); break;
            case family::pearl: match_pearl(ctx, kind, node); break;
            case family::necklace: break;
        }
    }
    return out;
}

// ==================== LEAF CLASSIFICATION ====================

namespace {

enum class leaf_role { none, leap, jump };

std::vector<int> classify_leaves(const sp_tree& t, leaf_role wanted) {
    if (!is_canonical(t))
        throw domain_error("leaf classification requires a canonical tree");
    std::vector<int> parent = parent_map(t);
    std::vector<int> out;
    for (std::size_t id = 0; id < t.nodes.size(); ++id) {
        if (t.nodes[id].kind != node_kind::leaf) continue;
        int p = parent[id];
        if (p < 0 || t.node(p).kind != node_kind::parallel) continue;
        bool leap = p == t.root && t.node(p).children.size() == 2;
        leaf_role role = leap ? leaf_role::leap : leaf_role::jump;
        if (role == wanted) out.push_back(static_cast<int>(id));
    }
    return out;
}

}  // namespace

std::vector<int> jump_edges(const sp_tree& t) {
    return classify_leaves(t, leaf_role::jump);
}

std::vector<int> leap_edges(const sp_tree& t) {
    return classify_leaves(t, leaf_role::leap);
}

// ==================== PATH REDUCTION ====================

namespace {

struct reduction_candidate {
    std::vector<int> interior;  // sorted
    int u;
    int v;
};

// Every induced path u - w1 - ... - wk - v with k >= 2 interior vertices of
// degree exactly two, endpoints distinct and non-adjacent. Keyed by interior
// set, so each path appears once.
std::vector<reduction_candidate> reduction_candidates(const multigraph& g) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : g.edges) {
        if (a > b) std::swap(a, b);
        edge_set.insert({a, b});
    }
    auto adjacent = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return edge_set.count({a, b}) > 0;
    };
    auto deg = [&](int v) {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : static_cast<int>(it->second.size());
    };

    std::map<std::vector<int>, std::pair<int, int>> found;
    for (int u : g.vertex_ids) {
        for (int first : adj[u]) {
            if (deg(first) != 2) continue;
            // walk the degree-two chain starting u -> first
            std::vector<int> interior{first};
            std::set<int> seen{u, first};
            int prev = u;
            int cur = first;
            while (true) {
                const auto& nb = adj[cur];
                int next = nb[0] == prev ? nb[1] : nb[0];
                if (seen.count(next)) break;  // closed up on the path
                if (interior.size() >= 2) {
                    int v = next;
                    if (v != u && !adjacent(u, v)) {
                        std::vector<int> key = interior;
                        std::sort(key.begin(), key.end());
                        found.emplace(std::move(key), std::make_pair(u, v));
                    }
                }
                if (deg(next) != 2) break;
                seen.insert(next);
                interior.push_back(next);
                prev = cur;
                cur = next;
            }
        }
    }
    std::vector<reduction_candidate> out;
    out.reserve(found.size());
    for (const auto& [key, ends] : found)
        out.push_back({key, ends.first, ends.second});
    return out;
}

multigraph contract_candidate(const multigraph& g, const reduction_candidate& c) {
    std::set<int> gone(c.interior.begin(), c.interior.end());
    int middle = c.interior.front();  // sorted: the least interior id survives
    multigraph out;
    for (int v : g.vertex_ids)
        if (!gone.count(v)) out.add_vertex(v);
    out.add_vertex(middle);
    for (const auto& [a, b] : g.edges)
        if (!gone.count(a) && !gone.count(b)) out.add_edge(a, b);
    out.add_edge(c.u, middle);
    out.add_edge(middle, c.v);
    return out;
}

void check_reducible_input(const multigraph& g) {
    if (!g.simple()) throw domain_error("reduction requires a simple graph");
    if (g.vertex_count() == 0 || components(g, {}) != 1)
        throw domain_error("reduction requires a connected graph");
}

}  // namespace

multigraph reduce(const multigraph& g) {
    check_reducible_input(g);
    multigraph cur = g;
    while (true) {
        auto candidates = reduction_candidates(cur);
        if (candidates.empty()) return cur;
        cur = contract_candidate(cur, candidates.front());
    }
}

std::vector<multigraph> reduction_steps(const multigraph& g) {
    check_reducible_input(g);
    std::vector<multigraph> out;
    for (const auto& c : reduction_candidates(g))
        out.push_back(contract_candidate(g, c));
    return out;
}

// ==================== SHAPE TESTS ====================

bool is_cycle(const multigraph& g) {
    if (g.vertex_count() < 3) return false;
    if (!g.simple()) return false;
    if (components(g, {}) != 1) return false;
    for (int v : g.vertex_ids)
        if (g.degree(v) != 2) return false;
    return true;
}

namespace {

std::optional<pearl_chain> chain_shape(const sp_tree& t) {
    const tree_node& root = t.node(t.root);
    if (root.kind != node_kind::series) return std::nullopt;
    if (!is_leaf(t, root.children.front()) || !is_leaf(t, root.children.back()))
        return std::nullopt;
    pearl_chain chain;
    for (int c : root.children) {
        if (is_leaf(t, c)) {
            chain.push_back({true, 0, 0});
            continue;
        }
        const tree_node& n = t.node(c);
        if (n.kind != node_kind::parallel || n.children.size() != 2)
            return std::nullopt;
        if (!is_arm(t, n.children[0], 2) || !is_arm(t, n.children[1], 2))
            return std::nullopt;
        int len_a = static_cast<int>(t.node(n.children[0]).children.size());
        int len_b = static_cast<int>(t.node(n.children[1]).children.size());
        chain.push_back({false, std::min(len_a, len_b), std::max(len_a, len_b)});
    }
    return chain;
}

}  // namespace

std::optional<pearl_chain> is_pearl_chain(const multigraph& g) {
    if (!g.simple()) throw domain_error("pearl chains are defined for simple graphs");
    for (std::size_t x = 0; x < g.vertex_ids.size(); ++x) {
        for (std::size_t y = x + 1; y < g.vertex_ids.size(); ++y) {
            auto tree = recognize(g, g.vertex_ids[x], g.vertex_ids[y]);
            if (!tree) continue;
            if (auto chain = chain_shape(*tree)) return chain;
        }
    }
    return std::nullopt;
}

// ==================== CLASSIFIER ====================

namespace {

// First terminal pair (lexicographic) admitting a decomposition.
std::optional<std::pair<std::pair<int, int>, recognition>> first_decomposition(
    const multigraph& g) {
    for (std::size_t x = 0; x < g.vertex_ids.size(); ++x) {
        for (std::size_t y = x + 1; y < g.vertex_ids.size(); ++y) {
            int u = g.vertex_ids[x];
            int v = g.vertex_ids[y];
            auto rec = recognize_with_edges(g, u, v);
            if (rec) return std::make_pair(std::make_pair(u, v), std::move(*rec));
        }
    }
    return std::nullopt;
}

classification_evidence oracle_counterexample(const multigraph& g) {
    minimality_verdict v = is_minimally_tough(g);
    if (v.counterexample_edge) return non_decreasing_edge{*v.counterexample_edge};
    return std::monostate{};
}

// Substructures ruling out minimality at toughness 1/2, checked in this
// order for evidence: r(4), q2, rr(3,3), rr(3,2), rr(3,1), and an rr(2,1)
// occurrence that is either not hosted by the root or whose outer r(2)
// terminal is not a cut vertex.
classification_evidence forbidden_evidence(const multigraph& g, const sp_tree& t) {
    const substructure_kind kinds[] = {
        substructure_kind::r(4), substructure_kind::q2(),
        substructure_kind::rr(3, 3), substructure_kind::rr(3, 2),
        substructure_kind::rr(3, 1)};
    for (const auto& kind : kinds) {
        auto occs = match_substructures(t, kind);
        if (!occs.empty()) return occs.front();
    }
    for (const auto& occ : match_substructures(t, substructure_kind::rr(2, 1))) {
        if (occ.tree_node != t.root) return occ;
        int s1 = occ.graph_vertices[0];
        labeled_graph lg = realize(t);
        if (components(lg.graph, {s1}) < 2) return occ;
    }
    return oracle_counterexample(g);
}

}  // namespace

classification_report classify(const multigraph& g) {
    if (g.vertex_count() == 0) throw domain_error("cannot classify the empty graph");

    classification_report report;
    if (g.has_loop() || g.has_parallel_edges()) {
        report.result = verdict::not_applicable;
        report.tau = toughness(g);
        report.reason = "graph is not simple";
        return report;
    }
    if (underlying_complete(g)) {
        report.result = verdict::not_applicable;
        report.tau = toughness(g);
        report.reason = "complete graphs have no cutset";
        return report;
    }

    auto decomposition = first_decomposition(g);
    if (!decomposition) throw domain_error("graph is not series-parallel");
    auto& [terminals, rec] = *decomposition;
    report.terminals = terminals;
    report.tree = rec.tree;

    report.tau = toughness(g);
    const rational half = make_rational(1, 2);
    const rational one = make_rational(1, 1);

    if (report.tau.value > one)
        throw domain_error("graph is not series-parallel");

    if (report.tau.value == one) {
        if (is_cycle(g)) {
            report.result = verdict::minimally_tough;
            report.reason = "toughness 1 and the graph is a cycle";
            report.evidence = cycle_certificate{static_cast<int>(g.vertex_count())};
        } else {
            report.result = verdict::not_minimally_tough;
            report.reason = "toughness 1 but the graph is not a cycle";
            report.evidence = oracle_counterexample(g);
        }
        return report;
    }

    if (report.tau.value > half) {
        auto jumps = jump_edges(rec.tree);
        if (jumps.empty()) {
            report.result = verdict::minimally_tough;
            report.reason = "toughness strictly between 1/2 and 1 and no jump edges";
        } else {
            report.result = verdict::not_minimally_tough;
            report.reason = "deleting a jump edge preserves the toughness";
            int leaf = jumps.front();
            auto it = rec.leaf_to_input_edge.find(leaf);
            report.evidence = jump_edge_evidence{
                leaf, it == rec.leaf_to_input_edge.end() ? -1 : it->second};
        }
        return report;
    }

    if (report.tau.value == half) {
        if (auto chain = is_pearl_chain(g)) {
            report.result = verdict::minimally_tough;
            report.reason = "toughness 1/2 and the graph is a pearl chain";
            report.evidence = std::move(*chain);
        } else {
            report.result = verdict::not_minimally_tough;
            report.reason = "toughness 1/2 but the graph is not a pearl chain";
            report.evidence = forbidden_evidence(g, rec.tree);
        }
        return report;
    }

    report.result = verdict::out_of_scope;
    report.reason = "toughness below 1/2 is outside the characterized range";
    return report;
}

}  // namespace sptough
