#include "sptough/sp_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sptough/errors.hpp"

namespace sptough {

const tree_node& sp_tree::node(int id) const {
    if (id < 0 || id >= static_cast<int>(nodes.size()))
        throw structural_error("node id out of range");
    return nodes[static_cast<std::size_t>(id)];
}

namespace {

bool equal_rec(const sp_tree& a, int ia, const sp_tree& b, int ib) {
    const tree_node& na = a.node(ia);
    const tree_node& nb = b.node(ib);
    if (na.kind != nb.kind) return false;
    if (na.children.size() != nb.children.size()) return false;
    for (std::size_t i = 0; i < na.children.size(); ++i)
        if (!equal_rec(a, na.children[i], b, nb.children[i])) return false;
    return true;
}

}  // namespace

bool operator==(const sp_tree& a, const sp_tree& b) {
    if (a.root < 0 || b.root < 0) return a.root == b.root && a.nodes.empty() && b.nodes.empty();
    return equal_rec(a, a.root, b, b.root);
}

void validate(const sp_tree& t) {
    if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size()))
        throw structural_error("tree has no valid root");
    std::vector<int> times_seen(t.nodes.size(), 0);
    std::vector<int> stack{t.root};
    std::size_t visited = 0;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        if (id < 0 || id >= static_cast<int>(t.nodes.size()))
            throw structural_error("child id out of range");
        if (++times_seen[static_cast<std::size_t>(id)] > 1)
            throw structural_error("node reachable more than once");
        ++visited;
        const tree_node& n = t.nodes[static_cast<std::size_t>(id)];
        if (n.kind == node_kind::leaf) {
            if (!n.children.empty()) throw structural_error("leaf with children");
        } else {
            if (n.children.size() < 2)
                throw structural_error("internal node needs at least two children");
            for (int c : n.children) stack.push_back(c);
        }
    }
    if (visited != t.nodes.size())
        throw structural_error("unreachable nodes in tree");
}

namespace {

int leaf_count_rec(const sp_tree& t, int id) {
    const tree_node& n = t.node(id);
    if (n.kind == node_kind::leaf) return 1;
    int total = 0;
    for (int c : n.children) total += leaf_count_rec(t, c);
    return total;
}

}  // namespace

int leaf_count(const sp_tree& t) {
    validate(t);
    return leaf_count_rec(t, t.root);
}

// ==================== CANONICAL FORM ====================

namespace {

// Recursive value-type mirror of sp_tree, convenient for rewriting. Leaves
// may carry the id of the graph edge they stand for.
struct builder {
    node_kind kind = node_kind::leaf;
    std::vector<builder> children;
    int tag = -1;
};

builder to_builder(const sp_tree& t, int id) {
    const tree_node& n = t.node(id);
    builder b;
    b.kind = n.kind;
    for (int c : n.children) b.children.push_back(to_builder(t, c));
    return b;
}

std::string oriented_str(const builder& b) {
    if (b.kind == node_kind::leaf) return "e";
    std::vector<std::string> parts;
    parts.reserve(b.children.size());
    for (const builder& c : b.children) parts.push_back(oriented_str(c));
    if (b.kind == node_kind::parallel) std::sort(parts.begin(), parts.end());
    std::string out(b.kind == node_kind::series ? "S(" : "P(");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    out += ')';
    return out;
}

builder flip_builder(builder b) {
    if (b.kind == node_kind::series)
        std::reverse(b.children.begin(), b.children.end());
    for (builder& c : b.children) c = flip_builder(std::move(c));
    return b;
}

builder canon_builder(const builder& b) {
    if (b.kind == node_kind::leaf) return {node_kind::leaf, {}, b.tag};
    builder out;
    out.kind = b.kind;
    for (const builder& child : b.children) {
        builder c = canon_builder(child);
        if (c.kind == b.kind) {
            // same-kind child folds into the parent
            for (builder& gc : c.children) out.children.push_back(std::move(gc));
        } else {
            out.children.push_back(std::move(c));
        }
    }
    if (out.kind == node_kind::parallel) {
        std::vector<std::pair<std::string, builder>> keyed;
        keyed.reserve(out.children.size());
        for (builder& c : out.children)
            keyed.emplace_back(oriented_str(c), std::move(c));
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        out.children.clear();
        for (auto& [key, c] : keyed) out.children.push_back(std::move(c));
    }
    return out;
}

int flatten_rec(const builder& b, sp_tree& t, std::map<int, int>* tags) {
    int id = t.add_node(b.kind, {});
    if (tags && b.kind == node_kind::leaf && b.tag >= 0) (*tags)[id] = b.tag;
    std::vector<int> children;
    children.reserve(b.children.size());
    for (const builder& c : b.children) children.push_back(flatten_rec(c, t, tags));
    t.nodes[static_cast<std::size_t>(id)].children = std::move(children);
    return id;
}

sp_tree flatten(const builder& b, std::map<int, int>* tags = nullptr) {
    sp_tree t;
    t.root = 0;
    flatten_rec(b, t, tags);
    return t;
}

bool canonical_rec(const sp_tree& t, int id) {
    const tree_node& n = t.node(id);
    if (n.kind == node_kind::leaf) return true;
    std::string prev;
    bool first = true;
    for (int c : n.children) {
        if (t.node(c).kind == n.kind) return false;
        if (!canonical_rec(t, c)) return false;
        if (n.kind == node_kind::parallel) {
            std::string key = oriented_str(to_builder(t, c));
            if (!first && key < prev) return false;
            prev = std::move(key);
            first = false;
        }
    }
    return true;
}

}  // namespace

sp_tree canonicalize(const sp_tree& t) {
    validate(t);
    return flatten(canon_builder(to_builder(t, t.root)));
}

bool is_canonical(const sp_tree& t) {
    validate(t);
    return canonical_rec(t, t.root);
}

sp_tree reversed(const sp_tree& t) {
    validate(t);
    return flatten(flip_builder(to_builder(t, t.root)));
}

std::string oriented_encode(const sp_tree& t) {
    validate(t);
    return oriented_str(to_builder(t, t.root));
}

std::string encode(const sp_tree& t) {
    if (!is_canonical(t)) throw domain_error("encode requires a canonical tree");
    builder b = to_builder(t, t.root);
    std::string forward = oriented_str(b);
    std::string backward = oriented_str(flip_builder(std::move(b)));
    return std::min(forward, backward);
}

// ==================== REALIZATION ====================

namespace {

struct realize_state {
    const sp_tree* tree;
    realization* out;
    int next_vertex;
};

void realize_rec(realize_state& st, int id, int a, int b) {
    const tree_node& n = st.tree->node(id);
    st.out->node_span[id] = {a, b};
    switch (n.kind) {
        case node_kind::leaf: {
            int edge_id = st.out->labeled.graph.add_edge(a, b);
            st.out->labeled.leaf_to_edge[id] = edge_id;
            break;
        }
        case node_kind::series: {
            std::vector<int> junctions{a};
            for (std::size_t i = 0; i + 1 < n.children.size(); ++i)
                junctions.push_back(st.next_vertex++);
            junctions.push_back(b);
            for (std::size_t i = 0; i < n.children.size(); ++i)
                realize_rec(st, n.children[i], junctions[i], junctions[i + 1]);
            break;
        }
        case node_kind::parallel: {
            for (int c : n.children) realize_rec(st, c, a, b);
            break;
        }
    }
}

}  // namespace

realization realize_with_spans(const sp_tree& t) {
    validate(t);
    realization out;
    out.labeled.s = 0;
    out.labeled.t = 1;
    out.labeled.graph.add_vertex(0);
    out.labeled.graph.add_vertex(1);
    realize_state st{&t, &out, 2};
    realize_rec(st, t.root, 0, 1);
    return out;
}

labeled_graph realize(const sp_tree& t) {
    return realize_with_spans(t).labeled;
}

// ==================== RECOGNITION ====================

namespace {

struct edge_rec {
    long id;
    int u, v;
    builder frag;  // oriented u -> v
    bool alive = true;
};

builder oriented_frag(const edge_rec& r, int from) {
    if (r.u == from) return r.frag;
    return flip_builder(r.frag);
}

}  // namespace

std::optional<recognition> recognize_with_edges(const multigraph& g, int s, int t) {
    g.index_of(s);
    g.index_of(t);
    if (s == t) throw domain_error("terminals must be distinct");
    if (components(g, {}) != 1)
        throw disconnected_error("recognition requires a connected graph");
    if (g.has_loop()) return std::nullopt;

    std::vector<edge_rec> recs;
    recs.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        recs.push_back({static_cast<long>(e), g.edges[e].first, g.edges[e].second,
                        {node_kind::leaf, {}, static_cast<int>(e)}, true});
    long next_id = static_cast<long>(g.edge_count());

    auto merge_parallel_once = [&]() -> bool {
        std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            if (!recs[i].alive) continue;
            auto key = std::minmax(recs[i].u, recs[i].v);
            groups[{key.first, key.second}].push_back(i);
        }
        for (auto& [key, idxs] : groups) {
            if (idxs.size() < 2) continue;
            std::sort(idxs.begin(), idxs.end(), [&](std::size_t x, std::size_t y) {
                return recs[x].id < recs[y].id;
            });
            edge_rec& first = recs[idxs[0]];
            edge_rec& second = recs[idxs[1]];
            builder merged{node_kind::parallel, {}};
            merged.children.push_back(first.frag);
            merged.children.push_back(oriented_frag(second, first.u));
            first.frag = std::move(merged);
            first.id = next_id++;
            second.alive = false;
            return true;
        }
        return false;
    };

    auto contract_series_once = [&]() -> bool {
        std::map<int, std::vector<std::size_t>> incident;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            if (!recs[i].alive) continue;
            incident[recs[i].u].push_back(i);
            if (recs[i].v != recs[i].u) incident[recs[i].v].push_back(i);
        }
        for (auto& [w, idxs] : incident) {
            if (w == s || w == t || idxs.size() != 2) continue;
            std::sort(idxs.begin(), idxs.end(), [&](std::size_t x, std::size_t y) {
                return recs[x].id < recs[y].id;
            });
            edge_rec& left = recs[idxs[0]];
            edge_rec& right = recs[idxs[1]];
            int u = left.u == w ? left.v : left.u;
            int v = right.u == w ? right.v : right.u;
            builder joined{node_kind::series, {}};
            joined.children.push_back(oriented_frag(left, u));
            joined.children.push_back(oriented_frag(right, w));
            left.frag = std::move(joined);
            left.u = u;
            left.v = v;
            left.id = next_id++;
            right.alive = false;
            return true;
        }
        return false;
    };

    while (true) {
        if (merge_parallel_once()) continue;
        if (contract_series_once()) continue;
        break;
    }

    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < recs.size(); ++i)
        if (recs[i].alive) alive.push_back(i);
    if (alive.size() != 1) return std::nullopt;
    edge_rec& last = recs[alive[0]];
    if (std::minmax(last.u, last.v) != std::minmax(s, t)) return std::nullopt;
    recognition out;
    out.tree = flatten(canon_builder(oriented_frag(last, s)), &out.leaf_to_input_edge);
    return out;
}

std::optional<sp_tree> recognize(const multigraph& g, int s, int t) {
    auto rec = recognize_with_edges(g, s, t);
    if (!rec) return std::nullopt;
    return std::move(rec->tree);
}

}  // namespace sptough
