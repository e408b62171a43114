#include "sptough/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sptough/errors.hpp"

namespace sptough {

void multigraph::add_vertex(int v) {
    if (v < 0) throw domain_error("vertex ids must be non-negative");
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
    if (it == vertex_ids.end() || *it != v) vertex_ids.insert(it, v);
}

int multigraph::add_edge(int a, int b) {
    add_vertex(a);
    add_vertex(b);
    edges.emplace_back(a, b);
    return static_cast<int>(edges.size()) - 1;
}

bool multigraph::has_vertex(int v) const {
    return std::binary_search(vertex_ids.begin(), vertex_ids.end(), v);
}

std::size_t multigraph::index_of(int v) const {
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
    if (it == vertex_ids.end() || *it != v)
        throw domain_error("unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(it - vertex_ids.begin());
}

int multigraph::degree(int v) const {
    if (!has_vertex(v)) throw domain_error("unknown vertex id " + std::to_string(v));
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

bool multigraph::has_loop() const {
    for (const auto& [a, b] : edges)
        if (a == b) return true;
    return false;
}

bool multigraph::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) return true;
    }
    return false;
}

namespace {

// Dense adjacency lists over vertex positions, with `removed` taken out.
struct dense_view {
    std::size_t n = 0;
    std::vector<char> alive;
    std::vector<std::vector<int>> adj;  // by position, loops skipped
};

dense_view make_view(const multigraph& g, const std::vector<int>& removed) {
    dense_view v;
    v.n = g.vertex_count();
    v.alive.assign(v.n, 1);
    v.adj.assign(v.n, {});
    for (int r : removed) v.alive[g.index_of(r)] = 0;
    for (const auto& [a, b] : g.edges) {
        if (a == b) continue;
        auto ia = g.index_of(a);
        auto ib = g.index_of(b);
        if (!v.alive[ia] || !v.alive[ib]) continue;
        v.adj[ia].push_back(static_cast<int>(ib));
        v.adj[ib].push_back(static_cast<int>(ia));
    }
    return v;
}

}  // namespace

int components(const multigraph& g, const std::vector<int>& removed) {
    dense_view v = make_view(g, removed);
    std::vector<char> seen(v.n, 0);
    int count = 0;
    std::vector<int> stack;
    for (std::size_t start = 0; start < v.n; ++start) {
        if (!v.alive[start] || seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.assign(1, static_cast<int>(start));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : v.adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

std::vector<std::vector<int>> component_sets(const multigraph& g,
                                             const std::vector<int>& removed) {
    dense_view v = make_view(g, removed);
    std::vector<char> seen(v.n, 0);
    std::vector<std::vector<int>> result;
    std::vector<int> stack;
    for (std::size_t start = 0; start < v.n; ++start) {
        if (!v.alive[start] || seen[start]) continue;
        std::vector<int> comp;
        seen[start] = 1;
        stack.assign(1, static_cast<int>(start));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(g.vertex_ids[static_cast<std::size_t>(u)]);
            for (int w : v.adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return result;
}

bool underlying_complete(const multigraph& g) {
    std::size_t n = g.vertex_count();
    if (n < 2) return true;
    std::set<std::pair<int, int>> present;
    for (auto [a, b] : g.edges) {
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        present.insert({a, b});
    }
    return present.size() == n * (n - 1) / 2;
}

multigraph without_edge(const multigraph& g, std::size_t edge_id) {
    if (edge_id >= g.edges.size()) throw domain_error("edge id out of range");
    multigraph result = g;
    result.edges.erase(result.edges.begin() + static_cast<std::ptrdiff_t>(edge_id));
    return result;
}

multigraph without_vertices(const multigraph& g, const std::vector<int>& removed) {
    for (int r : removed) g.index_of(r);  // validate
    std::set<int> gone(removed.begin(), removed.end());
    multigraph result;
    for (int v : g.vertex_ids)
        if (!gone.count(v)) result.add_vertex(v);
    for (const auto& [a, b] : g.edges)
        if (!gone.count(a) && !gone.count(b)) result.add_edge(a, b);
    return result;
}

namespace {

// Edge multiplicity matrix by dense position; loops sit on the diagonal.
std::vector<std::vector<int>> multiplicity_matrix(const multigraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& [a, b] : g.edges) {
        auto ia = g.index_of(a);
        auto ib = g.index_of(b);
        if (ia == ib) {
            ++m[ia][ia];
        } else {
            ++m[ia][ib];
            ++m[ib][ia];
        }
    }
    return m;
}

struct iso_state {
    const std::vector<std::vector<int>>* ma;
    const std::vector<std::vector<int>>* mb;
    std::size_t n;
    std::vector<int> map;      // position in a -> position in b, -1 unset
    std::vector<char> used;    // positions of b already taken
    const std::vector<int>* terminals_a;  // dense positions, may be null
    std::vector<char> terminal_b;         // flags by dense position
};

bool extend(iso_state& st, std::size_t i) {
    if (i == st.n) return true;
    bool need_terminal =
        st.terminals_a &&
        std::find(st.terminals_a->begin(), st.terminals_a->end(),
                  static_cast<int>(i)) != st.terminals_a->end();
    for (std::size_t j = 0; j < st.n; ++j) {
        if (st.used[j]) continue;
        if (st.terminals_a) {
            if (need_terminal != static_cast<bool>(st.terminal_b[j])) continue;
        }
        if ((*st.ma)[i][i] != (*st.mb)[j][j]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < i; ++k) {
            if ((*st.ma)[i][k] != (*st.mb)[j][static_cast<std::size_t>(st.map[k])]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        st.map[i] = static_cast<int>(j);
        st.used[j] = 1;
        if (extend(st, i + 1)) return true;
        st.used[j] = 0;
        st.map[i] = -1;
    }
    return false;
}

bool iso_impl(const multigraph& a, const multigraph& b,
              const std::vector<int>* terms_a, const std::vector<int>* terms_b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v : a.vertex_ids) da.push_back(a.degree(v));
    for (int v : b.vertex_ids) db.push_back(b.degree(v));
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    auto ma = multiplicity_matrix(a);
    auto mb = multiplicity_matrix(b);
    iso_state st;
    st.ma = &ma;
    st.mb = &mb;
    st.n = a.vertex_count();
    st.map.assign(st.n, -1);
    st.used.assign(st.n, 0);
    st.terminals_a = nullptr;
    std::vector<int> ta_dense;
    if (terms_a) {
        for (int v : *terms_a) ta_dense.push_back(static_cast<int>(a.index_of(v)));
        st.terminals_a = &ta_dense;
        st.terminal_b.assign(st.n, 0);
        for (int v : *terms_b) st.terminal_b[b.index_of(v)] = 1;
    }
    return extend(st, 0);
}

}  // namespace

bool isomorphic(const multigraph& a, const multigraph& b) {
    return iso_impl(a, b, nullptr, nullptr);
}

bool isomorphic_with_terminals(const multigraph& a, int sa, int ta,
                               const multigraph& b, int sb, int tb) {
    std::vector<int> terms_a{sa, ta};
    std::vector<int> terms_b{sb, tb};
    return iso_impl(a, b, &terms_a, &terms_b);
}

multigraph path_graph(int n) {
    if (n < 1) throw domain_error("path_graph needs at least one vertex");
    multigraph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

multigraph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle_graph needs at least three vertices");
    multigraph g;
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

multigraph complete_graph(int n) {
    if (n < 1) throw domain_error("complete_graph needs at least one vertex");
    multigraph g;
    g.add_vertex(0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

multigraph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw domain_error("complete_bipartite_graph needs both sides non-empty");
    multigraph g;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace sptough
