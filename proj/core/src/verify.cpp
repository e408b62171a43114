#include "sptough/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sptough/enumerate.hpp"
#include "sptough/errors.hpp"
#include "sptough/multigraph.hpp"
#include "sptough/parser.hpp"
#include "sptough/rational.hpp"
#include "sptough/sp_tree.hpp"
#include "sptough/structure.hpp"
#include "sptough/toughness.hpp"

namespace sptough {

namespace {

// ==================== SHARED UNIVERSE ====================

struct universe_entry {
    sp_tree tree;
    labeled_graph lg;
    toughness_value tau;
    mutable std::optional<minimality_verdict> verdict_cache;
};

const minimality_verdict& verdict_of(const universe_entry& e) {
    if (!e.verdict_cache) e.verdict_cache = is_minimally_tough(e.lg.graph);
    return *e.verdict_cache;
}

std::vector<universe_entry> build_universe(int max_leaves, bool simple_only) {
    std::vector<universe_entry> out;
    enumeration_config cfg;
    cfg.max_leaves = max_leaves;
    cfg.simple_only = simple_only;
    for_each_tree(cfg, [&](const sp_tree& t) {
        universe_entry e;
        e.tree = t;
        e.lg = realize(t);
        e.tau = toughness(e.lg.graph);
        out.push_back(std::move(e));
    });
    return out;
}

struct verify_context {
    verify_options opt;
    std::vector<universe_entry> entries;  // configured flavor
    std::vector<universe_entry> full;     // multigraphs included, same budget
};

// ==================== CHECK RECORDING ====================

struct recorder {
    suite_result result;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result.checked;
        if (!ok) {
            if (result.failed == 0) result.first_counterexample = describe();
            ++result.failed;
        }
    }
    void check(bool ok, const std::string& describe) {
        check(ok, [&] { return describe; });
    }
};

std::string expr_of(const universe_entry& e) { return serialize(e.tree); }

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << "}";
    return out.str();
}

// ==================== SMALL TREE HELPERS ====================

std::vector<int> tree_parents(const sp_tree& t) {
    std::vector<int> parent(t.nodes.size(), -1);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (int c : t.nodes[i].children) parent[static_cast<std::size_t>(c)] = static_cast<int>(i);
    return parent;
}

int node_height(const sp_tree& t, int id) {
    int h = 0;
    for (int c : t.node(id).children) h = std::max(h, 1 + node_height(t, c));
    return h;
}

sp_tree random_tree(std::mt19937& rng, int leaves) {
    sp_tree t;
    std::function<int(int)> gen = [&](int budget) -> int {
        if (budget == 1) return t.add_leaf();
        node_kind kind = rng() % 2 == 0 ? node_kind::series : node_kind::parallel;
        int arity = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(budget, 4) - 1));
        std::vector<int> parts(static_cast<std::size_t>(arity), 1);
        for (int extra = budget - arity; extra > 0; --extra)
            parts[rng() % static_cast<unsigned>(arity)] += 1;
        std::vector<int> children;
        for (int p : parts) children.push_back(gen(p));
        return t.add_node(kind, std::move(children));
    };
    t.root = gen(leaves);
    return t;
}

// ==================== SMALL GRAPH HELPERS ====================

bool graphs_equal(const multigraph& a, const multigraph& b) {
    auto norm = [](const multigraph& g) {
        std::vector<std::pair<int, int>> e;
        for (auto [x, y] : g.edges) e.push_back(std::minmax(x, y));
        std::sort(e.begin(), e.end());
        return std::make_pair(g.vertex_ids, e);
    };
    return norm(a) == norm(b);
}

bool contains_vertex(const std::vector<int>& sorted_set, int v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

bool adjacent(const multigraph& g, int u, int v) {
    for (auto [a, b] : g.edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

// Independent brute-force toughness used to audit the oracle: walks every
// vertex subset, counts components of the remainder by union-find, and
// collects every set attaining the optimum.
struct scan_result {
    bool any_cutset = false;
    rational best{};
    std::vector<std::vector<int>> attaining;
};

scan_result subset_scan(const multigraph& g) {
    int n = static_cast<int>(g.vertex_count());
    scan_result out;
    if (n == 0 || n > 20) return out;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : g.edges) {
        if (a == b) continue;
        int ia = static_cast<int>(g.index_of(a));
        int ib = static_cast<int>(g.index_of(b));
        adj[static_cast<std::size_t>(ia)].push_back(ib);
        adj[static_cast<std::size_t>(ib)].push_back(ia);
    }
    auto comps_of = [&](unsigned removed_mask) {
        std::vector<int> root(static_cast<std::size_t>(n), -1);
        std::function<int(int)> find = [&](int x) {
            return root[static_cast<std::size_t>(x)] == x
                       ? x
                       : root[static_cast<std::size_t>(x)] =
                             find(root[static_cast<std::size_t>(x)]);
        };
        int comps = 0;
        for (int v = 0; v < n; ++v)
            if (!(removed_mask >> v & 1u)) {
                root[static_cast<std::size_t>(v)] = v;
                ++comps;
            }
        for (int v = 0; v < n; ++v) {
            if (removed_mask >> v & 1u) continue;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (removed_mask >> w & 1u) continue;
                int rv = find(v), rw = find(w);
                if (rv != rw) {
                    root[static_cast<std::size_t>(rv)] = rw;
                    --comps;
                }
            }
        }
        return comps;
    };

    long long best_num = 0, best_den = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int c = comps_of(mask);
        if (c < 2) continue;
        long long s = __builtin_popcount(mask);
        if (!out.any_cutset || s * best_den < best_num * c) {
            out.any_cutset = true;
            best_num = s;
            best_den = c;
        }
    }
    if (!out.any_cutset) return out;
    out.best = make_rational(best_num, best_den);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int c = comps_of(mask);
        if (c < 2) continue;
        long long s = __builtin_popcount(mask);
        if (s * best_den == best_num * c) {
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) set.push_back(g.vertex_ids[static_cast<std::size_t>(v)]);
            out.attaining.push_back(std::move(set));
        }
    }
    return out;
}

// ==================== INDEPENDENT SHAPE ORACLE ====================

// Recount oracle for the enumerator: builds every ordered alternating tree
// shape directly as a two-terminal edge list (series and parallel joins by
// integer relabeling, no sp_tree machinery) and dedups by terminal-aware
// graph isomorphism.
struct shape_net {
    int n = 2;  // vertices 0..n-1 with s = 0, t = 1
    std::vector<std::pair<int, int>> edges;
};

shape_net shape_leaf() { return {2, {{0, 1}}}; }

shape_net shape_series(const std::vector<shape_net>& parts) {
    std::vector<std::pair<int, int>> raw;
    int next = 1;
    int head = 0;
    for (const shape_net& p : parts) {
        std::vector<int> map(static_cast<std::size_t>(p.n), -1);
        map[0] = head;
        map[1] = next++;
        for (int v = 2; v < p.n; ++v) map[static_cast<std::size_t>(v)] = next++;
        for (auto [a, b] : p.edges)
            raw.push_back({map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]});
        head = map[1];
    }
    std::vector<int> final_map(static_cast<std::size_t>(next), -1);
    final_map[0] = 0;
    final_map[static_cast<std::size_t>(head)] = 1;
    int fresh = 2;
    for (int v = 1; v < next; ++v)
        if (final_map[static_cast<std::size_t>(v)] == -1)
            final_map[static_cast<std::size_t>(v)] = fresh++;
    shape_net out;
    out.n = next;
    for (auto [a, b] : raw)
        out.edges.push_back(
            {final_map[static_cast<std::size_t>(a)], final_map[static_cast<std::size_t>(b)]});
    return out;
}

shape_net shape_parallel(const std::vector<shape_net>& parts) {
    shape_net out;
    out.n = 2;
    for (const shape_net& p : parts) {
        std::vector<int> map(static_cast<std::size_t>(p.n));
        map[0] = 0;
        map[1] = 1;
        for (int v = 2; v < p.n; ++v) map[static_cast<std::size_t>(v)] = out.n++;
        for (auto [a, b] : p.edges)
            out.edges.push_back(
                {map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]});
    }
    return out;
}

std::vector<shape_net> shapes_series(int l);
std::vector<shape_net> shapes_parallel(int l);

void shape_compose(int l, bool series_mode, std::vector<shape_net>& acc,
                   std::vector<std::vector<shape_net>>& out) {
    if (l == 0) {
        if (acc.size() >= 2) out.push_back(acc);
        return;
    }
    acc.push_back(shape_leaf());
    shape_compose(l - 1, series_mode, acc, out);
    acc.pop_back();
    int max_sub = acc.empty() ? l - 1 : l;
    for (int sub = 2; sub <= max_sub; ++sub) {
        std::vector<shape_net> subs = series_mode ? shapes_parallel(sub) : shapes_series(sub);
        for (shape_net& s : subs) {
            acc.push_back(std::move(s));
            shape_compose(l - sub, series_mode, acc, out);
            acc.pop_back();
        }
    }
}

std::vector<shape_net> shapes_series(int l) {
    static std::map<int, std::vector<shape_net>> cache;
    if (auto it = cache.find(l); it != cache.end()) return it->second;
    std::vector<shape_net> result;
    std::vector<shape_net> acc;
    std::vector<std::vector<shape_net>> groups;
    shape_compose(l, true, acc, groups);
    for (const auto& g : groups) result.push_back(shape_series(g));
    cache[l] = result;
    return result;
}

std::vector<shape_net> shapes_parallel(int l) {
    static std::map<int, std::vector<shape_net>> cache;
    if (auto it = cache.find(l); it != cache.end()) return it->second;
    std::vector<shape_net> result;
    std::vector<shape_net> acc;
    std::vector<std::vector<shape_net>> groups;
    shape_compose(l, false, acc, groups);
    for (const auto& g : groups) result.push_back(shape_parallel(g));
    cache[l] = result;
    return result;
}

struct recount { long long full = 0; long long simple = 0; };

recount recount_classes(int leaves) {
    std::vector<shape_net> all;
    if (leaves == 1) all.push_back(shape_leaf());
    for (shape_net& x : shapes_series(leaves)) all.push_back(std::move(x));
    for (shape_net& x : shapes_parallel(leaves)) all.push_back(std::move(x));

    recount out;
    std::map<std::vector<int>, std::vector<multigraph>> buckets;
    for (const shape_net& x : all) {
        multigraph g;
        for (int v = 0; v < x.n; ++v) g.add_vertex(v);
        for (auto [a, b] : x.edges) g.add_edge(a, b);
        std::vector<int> sig;
        for (int v = 0; v < x.n; ++v) sig.push_back(g.degree(v));
        if (sig[0] > sig[1]) std::swap(sig[0], sig[1]);
        std::sort(sig.begin() + 2, sig.end());
        auto& bucket = buckets[sig];
        bool seen = false;
        for (const multigraph& h : bucket)
            if (isomorphic_with_terminals(g, 0, 1, h, 0, 1)) {
                seen = true;
                break;
            }
        if (!seen) {
            if (g.simple()) ++out.simple;
            ++out.full;
            bucket.push_back(std::move(g));
        }
    }
    return out;
}

// ==================== NECKLACE CONSTRUCTION ====================

// Direct edge-list construction of a necklace: a series chain of members,
// each a single edge (false) or an r(2) pearl with both arms length 2
// (true); callers keep the first and last members edges. joints receives
// the chain vertices when given.
multigraph necklace_graph(const std::vector<bool>& members,
                          std::vector<int>* joints = nullptr) {
    multigraph g;
    int next = 0;
    int prev = next++;
    g.add_vertex(prev);
    if (joints) joints->push_back(prev);
    for (bool pearl : members) {
        int cur = next++;
        if (!pearl) {
            g.add_edge(prev, cur);
        } else {
            int m1 = next++;
            int m2 = next++;
            g.add_edge(prev, m1);
            g.add_edge(m1, cur);
            g.add_edge(prev, m2);
            g.add_edge(m2, cur);
        }
        if (joints) joints->push_back(cur);
        prev = cur;
    }
    return g;
}

// Bracelet of length l (a chain of l pearls) closed by one parallel edge
// between its ends.
multigraph closed_bracelet(int l) {
    std::vector<bool> members(static_cast<std::size_t>(l), true);
    std::vector<int> joints;
    multigraph g = necklace_graph(members, &joints);
    g.add_edge(joints.front(), joints.back());
    return g;
}

const rational half = make_rational(1, 2);
const rational one_third = make_rational(1, 3);
const rational one = make_rational(1, 1);

// ==================== SUITES ====================

void suite_golden_values(verify_context&, recorder& rec) {
    auto tau_is = [&](const multigraph& g, tough_kind kind, rational v, const std::string& what) {
        toughness_value t = toughness(g);
        bool ok = t.kind == kind && (kind != tough_kind::finite || t.value == v);
        rec.check(ok, [&] { return what + ": toughness " + to_string(t); });
    };

    tau_is(path_graph(2), tough_kind::infinite, {}, "single edge");
    tau_is(complete_graph(1), tough_kind::infinite, {}, "one vertex");
    tau_is(complete_graph(3), tough_kind::infinite, {}, "triangle");
    tau_is(complete_graph(4), tough_kind::infinite, {}, "complete on four");
    tau_is(path_graph(3), tough_kind::finite, half, "path with two edges");
    tau_is(cycle_graph(4), tough_kind::finite, one, "four cycle");
    tau_is(complete_bipartite_graph(2, 3), tough_kind::finite, make_rational(2, 3),
           "two by three bipartite");
    tau_is(complete_bipartite_graph(2, 4), tough_kind::finite, half, "two by four bipartite");

    multigraph split;
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    tau_is(split, tough_kind::zero, {}, "two disjoint edges");

    multigraph doubled;
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    tau_is(doubled, tough_kind::infinite, {}, "doubled edge");

    multigraph looped = path_graph(3);
    looped.add_edge(0, 0);
    tau_is(looped, tough_kind::finite, half, "path with a loop");

    // removing all but one joint of the closed bracelet isolates 2(l-1)
    // middles and leaves one component, so l/(2l-1) is an upper bound; the
    // exhaustive oracle confirms it is exact
    for (int l = 2; l <= 5; ++l) {
        tau_is(closed_bracelet(l), tough_kind::finite, make_rational(l, 2 * l - 1),
               "closed bracelet length " + std::to_string(l));
    }

    // components
    rec.check(components(cycle_graph(4), {0, 2}) == 2, "opposite pair of the four cycle");
    rec.check(components(path_graph(5), {}) == 1, "connected graph, nothing removed");
    {
        multigraph k23 = complete_bipartite_graph(2, 3);
        std::vector<int> small_side;
        for (int v : k23.vertex_ids)
            if (k23.degree(v) == 3) small_side.push_back(v);
        rec.check(components(k23, small_side) == 3, "two by three bipartite minus its small side");
        bool threw = false;
        try {
            components(k23, {99});
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "components with an unknown vertex id");
    }

    // tough sets
    {
        auto sets = tough_sets(path_graph(3));
        rec.check(sets == std::vector<std::vector<int>>{{1}}, "tough sets of the short path");
        auto c4 = tough_sets(cycle_graph(4));
        rec.check(c4 == std::vector<std::vector<int>>{{0, 2}, {1, 3}},
                  "tough sets of the four cycle");
        bool threw = false;
        try {
            tough_sets(complete_graph(3));
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "tough sets of a complete graph");
        threw = false;
        multigraph split2;
        split2.add_edge(0, 1);
        split2.add_edge(2, 3);
        try {
            tough_sets(split2);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "tough sets of a disconnected graph");
    }

    // a two-pearl necklace: every tough set stays on the joints
    {
        std::vector<int> joints;
        multigraph neck = necklace_graph({false, true, true, false}, &joints);
        toughness_value t = toughness(neck);
        rec.check(t.finite() && t.value == half, "two-pearl necklace toughness");
        for (const auto& s : tough_sets(neck)) {
            bool on_joints = true;
            for (int v : s)
                if (!contains_vertex(joints, v)) on_joints = false;
            rec.check(on_joints,
                      [&] { return "necklace tough set touches a middle: " + join_ints(s); });
        }
    }

    // minimality goldens
    {
        minimality_verdict c5 = is_minimally_tough(cycle_graph(5));
        rec.check(c5.is_minimal && c5.tau.finite() && c5.tau.value == one,
                  "five cycle minimality");
        minimality_verdict k24 = is_minimally_tough(complete_bipartite_graph(2, 4));
        rec.check(!k24.is_minimal && k24.tau.finite() && k24.tau.value == half &&
                      k24.counterexample_edge.has_value(),
                  "two by four bipartite is not minimal");
        multigraph doubled2 = cycle_graph(4);
        doubled2.add_edge(0, 1);
        rec.check(!is_minimally_tough(doubled2).is_minimal, "parallel pair is never minimal");
        minimality_verdict k1 = is_minimally_tough(complete_graph(1));
        rec.check(!k1.is_minimal && k1.tau.kind == tough_kind::infinite,
                  "one vertex is never minimal");
    }

    // connectivity goldens
    rec.check(vertex_connectivity(cycle_graph(4)) == 2, "connectivity of the four cycle");
    rec.check(vertex_connectivity(path_graph(3)) == 1, "connectivity of the short path");
    rec.check(vertex_connectivity(complete_graph(4)) == 3, "connectivity of complete on four");
    {
        multigraph split3;
        split3.add_edge(0, 1);
        split3.add_edge(2, 3);
        rec.check(vertex_connectivity(split3) == 0, "connectivity of a disconnected graph");
    }

    // capacity and empty-input behavior
    {
        bool threw = false;
        try {
            toughness(path_graph(25));
        } catch (const capacity_error&) {
            threw = true;
        }
        rec.check(threw, "vertex cap enforcement");
        threw = false;
        try {
            toughness(multigraph{});
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "toughness of the empty graph");
    }
}

void suite_mediant_inequality(verify_context&, recorder& rec) {
    rec.check(mediant(half, make_rational(2, 3)) == make_rational(3, 5),
              "mediant of 1/2 and 2/3");

    std::mt19937 rng(424242);
    for (int i = 0; i < 10000; ++i) {
        rational a = make_rational(rng() % 40, 1 + rng() % 40);
        rational b = make_rational(rng() % 40, 1 + rng() % 40);
        if (b < a) std::swap(a, b);
        rational m = mediant(a, b);
        bool ok;
        if (a == b)
            ok = m == a;
        else
            ok = a < m && m < b;
        rec.check(ok, [&] {
            return "mediant of " + to_string(a) + " and " + to_string(b) + " gave " + to_string(m);
        });
    }
}

void suite_parser_roundtrip(verify_context&, recorder& rec) {
    std::mt19937 rng(7);
    for (int i = 0; i < 10000; ++i) {
        int leaves = 1 + static_cast<int>(rng() % 8);
        sp_tree t = random_tree(rng, leaves);
        std::string text = serialize(t);
        sp_tree back = parse(text);
        rec.check(back == t, [&] { return "parse(serialize) changed " + text; });
        rec.check(serialize(back) == text, [&] { return "serialize(parse) changed " + text; });
    }

    rec.check(parse(" S ( e , P( e ,\n e ) ) ") == parse("S(e,P(e,e))"),
              "whitespace tolerance");

    const char* bad[] = {"",          "S(e)",   "e,e",     "S(e,,e)", "X(e,e)",
                         "S(e,e",     "P()",    "P(e)",    "s(e,e)",  "S(e,e))",
                         "S(e,e) e",  "ee",     "S(,e)",   "(e,e)"};
    for (const char* text : bad) {
        bool threw = false;
        int line = 0, column = 0;
        try {
            parse(text);
        } catch (const parse_error& err) {
            threw = true;
            line = err.line;
            column = err.column;
        }
        rec.check(threw && line >= 1 && column >= 1,
                  [&] { return std::string("malformed expression accepted: \"") + text + "\""; });
    }

    // edge lists: multiplicity preserved, comments and blanks skipped
    for (int i = 0; i < 2000; ++i) {
        int m = 1 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        std::ostringstream text;
        text << "# random instance\n";
        for (int j = 0; j < m; ++j) {
            int u = static_cast<int>(rng() % 9);
            int v = static_cast<int>(rng() % 9);
            edges.push_back(std::minmax(u, v));
            text << u << " " << v << "\n";
            if (rng() % 4 == 0) text << "\n";
            if (rng() % 5 == 0) text << "# noise\n";
        }
        multigraph g = read_edge_list(text.str());
        std::vector<std::pair<int, int>> got;
        for (auto [a, b] : g.edges) got.push_back(std::minmax(a, b));
        std::sort(edges.begin(), edges.end());
        std::sort(got.begin(), got.end());
        rec.check(edges == got && g.edge_count() == static_cast<std::size_t>(m),
                  [&] { return "edge list roundtrip changed:\n" + text.str(); });
    }

    const char* bad_lists[] = {"1", "a b", "1 2 3", "-1 2", "1 b"};
    for (const char* text : bad_lists) {
        bool threw = false;
        try {
            read_edge_list(text);
        } catch (const parse_error&) {
            threw = true;
        }
        rec.check(threw,
                  [&] { return std::string("malformed edge list accepted: \"") + text + "\""; });
    }

    // dot export stays well formed
    {
        dot_options edge_opts;
        edge_opts.terminals = std::make_pair(0, 1);
        std::string dot = to_dot(path_graph(2), edge_opts);
        rec.check(dot.rfind("graph G {", 0) == 0 && dot.find("0 -- 1") != std::string::npos &&
                      dot.find("doublecircle") != std::string::npos,
                  "dot output for a single edge");
        dot_options c4_opts;
        c4_opts.tough_set = {0, 2};
        c4_opts.highlight_edges = {1};
        std::string c4 = to_dot(cycle_graph(4), c4_opts);
        int edge_lines = 0;
        for (std::size_t pos = 0; (pos = c4.find(" -- ", pos)) != std::string::npos; ++pos)
            ++edge_lines;
        rec.check(edge_lines == 4 && c4.find("gray80") != std::string::npos &&
                      c4.find("penwidth") != std::string::npos && c4.back() == '\n',
                  "dot output for the annotated four cycle");
        std::string neck = to_dot(necklace_graph({false, true, false}), {});
        rec.check(neck.rfind("graph G {", 0) == 0 && neck.find("}") != std::string::npos,
                  "dot output for a necklace");
    }
}

void suite_canonical_realize(verify_context&, recorder& rec) {
    rec.check(canonicalize(parse("P(e,S(e,e))")) == parse("P(S(e,e),e)"),
              "parallel children sort");
    rec.check(canonicalize(parse("S(S(e,e),e)")) == parse("S(e,e,e)"), "series fold");
    rec.check(!is_canonical(parse("S(S(e,e),e)")), "nested series is not canonical");
    rec.check(!is_canonical(parse("P(e,S(e,e))")), "unsorted parallel is not canonical");
    rec.check(is_canonical(parse("P(S(e,e),e)")), "sorted parallel is canonical");

    std::mt19937 rng(99);
    for (int i = 0; i < 2000; ++i) {
        int leaves = 1 + static_cast<int>(rng() % 8);
        sp_tree t = random_tree(rng, leaves);
        sp_tree c = canonicalize(t);
        std::string text = serialize(t);
        rec.check(is_canonical(c), [&] { return "canonicalize not canonical for " + text; });
        rec.check(canonicalize(c) == c, [&] { return "canonicalize not idempotent for " + text; });
        rec.check(leaf_count(c) == leaves, [&] { return "canonicalize lost leaves of " + text; });
        labeled_graph lt = realize(t);
        labeled_graph lc = realize(c);
        rec.check(isomorphic_with_terminals(lt.graph, lt.s, lt.t, lc.graph, lc.s, lc.t),
                  [&] { return "canonicalize changed the graph of " + text; });

        sp_tree r = reversed(t);
        rec.check(reversed(r) == t, [&] { return "double reversal changed " + text; });
        labeled_graph lr = realize(r);
        rec.check(isomorphic_with_terminals(lt.graph, lt.s, lt.t, lr.graph, lr.s, lr.t),
                  [&] { return "reversal changed the graph of " + text; });
        rec.check(encode(c) == encode(canonicalize(r)),
                  [&] { return "encode differs across reversal of " + text; });
    }
}

void suite_encode_complete(verify_context& ctx, recorder& rec) {
    std::map<int, std::vector<const universe_entry*>> by_leaves;
    for (const universe_entry& e : ctx.full) by_leaves[leaf_count(e.tree)].push_back(&e);

    for (auto& [leaves, group] : by_leaves) {
        // encode is the smaller oriented fingerprint and ignores orientation
        for (const universe_entry* e : group) {
            std::string enc = encode(e->tree);
            rec.check(enc == std::min(oriented_encode(e->tree),
                                      oriented_encode(reversed(e->tree))),
                      [&] { return "encode is not the smaller orientation of " + expr_of(*e); });
            rec.check(encode(canonicalize(reversed(e->tree))) == enc,
                      [&] { return "encode not reversal-invariant for " + expr_of(*e); });
        }

        // distinct encode classes realize non-isomorphic terminal graphs
        std::map<std::vector<int>, std::vector<const universe_entry*>> buckets;
        for (const universe_entry* e : group) {
            const multigraph& g = e->lg.graph;
            std::vector<int> sig;
            for (int v : g.vertex_ids) sig.push_back(g.degree(v));
            if (sig[0] > sig[1]) std::swap(sig[0], sig[1]);
            std::sort(sig.begin() + 2, sig.end());
            buckets[sig].push_back(e);
        }
        for (auto& [sig, bucket] : buckets) {
            for (std::size_t i = 0; i < bucket.size(); ++i)
                for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                    bool iso = isomorphic_with_terminals(bucket[i]->lg.graph, 0, 1,
                                                         bucket[j]->lg.graph, 0, 1);
                    rec.check(!iso, [&] {
                        return "distinct classes realize isomorphic graphs: " +
                               expr_of(*bucket[i]) + " and " + expr_of(*bucket[j]);
                    });
                }
        }
    }

    bool threw = false;
    try {
        encode(parse("S(S(e,e),e)"));
    } catch (const domain_error&) {
        threw = true;
    }
    rec.check(threw, "encode of a non-canonical tree");
}

void suite_recognize_roundtrip(verify_context& ctx, recorder& rec) {
    auto roundtrip = [&](const universe_entry& e) {
        const multigraph& g = e.lg.graph;
        std::string enc = encode(e.tree);
        auto forward = recognize(g, 0, 1);
        rec.check(forward && is_canonical(*forward) && encode(*forward) == enc,
                  [&] { return "recognition failed to recover " + expr_of(e); });
        auto swapped = recognize(g, 1, 0);
        rec.check(swapped && encode(*swapped) == enc,
                  [&] { return "swapped-terminal recognition differs for " + expr_of(e); });

        auto tagged = recognize_with_edges(g, 0, 1);
        bool ok = tagged.has_value();
        if (ok) {
            std::set<int> used;
            int leaves = 0;
            for (std::size_t id = 0; id < tagged->tree.nodes.size(); ++id) {
                if (tagged->tree.nodes[id].kind != node_kind::leaf) continue;
                ++leaves;
                auto it = tagged->leaf_to_input_edge.find(static_cast<int>(id));
                if (it == tagged->leaf_to_input_edge.end() || it->second < 0 ||
                    it->second >= static_cast<int>(g.edge_count()) ||
                    !used.insert(it->second).second) {
                    ok = false;
                    break;
                }
            }
            if (ok) ok = used.size() == g.edge_count() && leaves == static_cast<int>(g.edge_count());
        }
        rec.check(ok, [&] { return "leaf-to-edge map is not a bijection for " + expr_of(e); });
    };
    for (const universe_entry& e : ctx.full) roundtrip(e);
    if (ctx.opt.simple_only)
        for (const universe_entry& e : ctx.entries) roundtrip(e);

    // graphs that are not two-terminal series-parallel for any pair
    {
        multigraph k4 = complete_graph(4);
        for (std::size_t x = 0; x < k4.vertex_count(); ++x)
            for (std::size_t y = x + 1; y < k4.vertex_count(); ++y)
                rec.check(!recognize(k4, k4.vertex_ids[x], k4.vertex_ids[y]).has_value(),
                          "complete on four recognized as series-parallel");
        multigraph prism;  // two triangles joined by a matching: has a K4 minor
        prism.add_edge(0, 1);
        prism.add_edge(1, 2);
        prism.add_edge(0, 2);
        prism.add_edge(3, 4);
        prism.add_edge(4, 5);
        prism.add_edge(3, 5);
        prism.add_edge(0, 3);
        prism.add_edge(1, 4);
        prism.add_edge(2, 5);
        for (std::size_t x = 0; x < prism.vertex_count(); ++x)
            for (std::size_t y = x + 1; y < prism.vertex_count(); ++y)
                rec.check(!recognize(prism, prism.vertex_ids[x], prism.vertex_ids[y]).has_value(),
                          "prism recognized as series-parallel");
    }

    // recognition is terminal-sensitive: the bipartite graph plus an edge on
    // its small side decomposes for that pair and for no big-side pair
    {
        multigraph g = complete_bipartite_graph(2, 3);
        std::vector<int> small_side, big_side;
        for (int v : g.vertex_ids)
            (g.degree(v) == 3 ? small_side : big_side).push_back(v);
        g.add_edge(small_side[0], small_side[1]);
        auto tree = recognize(g, small_side[0], small_side[1]);
        rec.check(tree.has_value() &&
                      encode(*tree) == encode(canonicalize(parse("P(e,S(e,e),S(e,e),S(e,e))"))),
                  "augmented bipartite graph for its small side");
        for (std::size_t x = 0; x < big_side.size(); ++x)
            for (std::size_t y = x + 1; y < big_side.size(); ++y)
                rec.check(!recognize(g, big_side[x], big_side[y]).has_value(),
                          "augmented bipartite graph for a big-side pair");
    }

    // error contract
    {
        bool threw = false;
        try {
            recognize(path_graph(3), 0, 0);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "equal terminals accepted");
        threw = false;
        try {
            recognize(path_graph(3), 0, 99);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "unknown terminal accepted");
        threw = false;
        multigraph split;
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        try {
            recognize(split, 0, 3);
        } catch (const disconnected_error&) {
            threw = true;
        }
        rec.check(threw, "disconnected input not reported");

        multigraph looped = path_graph(2);
        looped.add_edge(0, 0);
        rec.check(!recognize(looped, 0, 1).has_value(), "loop input recognized");
    }
}

void suite_enum_universe(verify_context& ctx, recorder& rec) {
    static const long long full_table[8] = {1, 2, 4, 11, 30, 98, 328, 1193};
    static const long long simple_table[8] = {1, 1, 2, 4, 9, 23, 60, 170};

    std::map<int, long long> full_counts, simple_counts;
    for (const universe_entry& e : ctx.full) {
        int l = leaf_count(e.tree);
        ++full_counts[l];
        if (e.lg.graph.simple()) ++simple_counts[l];
    }
    for (int l = 1; l <= std::min(ctx.opt.max_leaves, 8); ++l) {
        rec.check(full_counts[l] == full_table[l - 1], [&] {
            return "class count at " + std::to_string(l) + " leaves is " +
                   std::to_string(full_counts[l]) + ", expected " +
                   std::to_string(full_table[l - 1]);
        });
        rec.check(simple_counts[l] == simple_table[l - 1], [&] {
            return "simple class count at " + std::to_string(l) + " leaves is " +
                   std::to_string(simple_counts[l]) + ", expected " +
                   std::to_string(simple_table[l - 1]);
        });
        recount oracle = recount_classes(l);
        rec.check(oracle.full == full_counts[l] && oracle.simple == simple_counts[l], [&] {
            return "independent recount disagrees at " + std::to_string(l) + " leaves: " +
                   std::to_string(oracle.full) + "/" + std::to_string(oracle.simple) +
                   " against " + std::to_string(full_counts[l]) + "/" +
                   std::to_string(simple_counts[l]);
        });
    }

    // emission discipline: ordered, canonical, no duplicates, connected
    auto emission = [&](const std::vector<universe_entry>& items, bool expect_simple) {
        int last_leaves = 0;
        std::string last_encode;
        for (const universe_entry& e : items) {
            int l = leaf_count(e.tree);
            std::string enc = encode(e.tree);
            bool ordered = l > last_leaves || (l == last_leaves && enc > last_encode);
            rec.check(ordered, [&] { return "emission out of order at " + expr_of(e); });
            rec.check(is_canonical(e.tree) && canonicalize(e.tree) == e.tree,
                      [&] { return "emitted tree is not canonical: " + expr_of(e); });
            rec.check(components(e.lg.graph, {}) == 1,
                      [&] { return "emitted graph disconnected: " + expr_of(e); });
            rec.check(!expect_simple || e.lg.graph.simple(),
                      [&] { return "simple-only emitted parallel edges: " + expr_of(e); });
            rec.check(e.lg.s == 0 && e.lg.t == 1 &&
                          e.lg.leaf_to_edge.size() == static_cast<std::size_t>(l) &&
                          e.lg.graph.edge_count() == static_cast<std::size_t>(l),
                      [&] { return "realization bookkeeping wrong for " + expr_of(e); });
            last_leaves = l;
            last_encode = enc;
        }
    };
    emission(ctx.full, false);
    if (ctx.opt.simple_only) emission(ctx.entries, true);

    // the simple flavor is exactly the simple slice of the unfiltered one
    {
        enumeration_config cfg;
        cfg.max_leaves = ctx.opt.max_leaves;
        cfg.simple_only = true;
        std::vector<std::string> filtered_encodes;
        for (const universe_entry& e : ctx.full)
            if (e.lg.graph.simple()) filtered_encodes.push_back(encode(e.tree));
        std::vector<std::string> emitted;
        for_each_tree(cfg, [&](const sp_tree& t) { emitted.push_back(encode(t)); });
        rec.check(emitted == filtered_encodes, "simple flavor differs from the simple slice");
    }

    // residual duplicates across terminal choices are measured, not removed
    if (ctx.opt.max_leaves >= 4) {
        int c4_classes = 0;
        for (const universe_entry& e : ctx.full)
            if (leaf_count(e.tree) == 4 && isomorphic(e.lg.graph, cycle_graph(4))) ++c4_classes;
        rec.check(c4_classes == 2, [&] {
            return "four-cycle classes at 4 leaves: " + std::to_string(c4_classes);
        });
    }
    if (ctx.opt.max_leaves >= 6) {
        int k23_classes = 0;
        for (const universe_entry& e : ctx.full)
            if (leaf_count(e.tree) == 6 &&
                isomorphic(e.lg.graph, complete_bipartite_graph(2, 3)))
                ++k23_classes;
        rec.check(k23_classes == 2, [&] {
            return "two-by-three classes at 6 leaves: " + std::to_string(k23_classes);
        });
    }

    // configuration edge cases
    {
        enumeration_config cfg;
        cfg.max_leaves = 1;
        rec.check(enum_trees(cfg).size() == 1, "single-leaf budget");
        cfg.max_leaves = 2;
        cfg.simple_only = true;
        auto two = enum_trees(cfg);
        rec.check(two.size() == 2 && serialize(two[1]) == "S(e,e)",
                  "two-leaf simple budget");
        cfg.max_leaves = 0;
        rec.check(enum_trees(cfg).empty(), "zero budget");
        cfg.max_leaves = 13;
        bool threw = false;
        try {
            enum_trees(cfg);
        } catch (const capacity_error&) {
            threw = true;
        }
        rec.check(threw, "budget beyond the cap accepted");

        enumeration_config filt;
        filt.max_leaves = std::min(ctx.opt.max_leaves, 4);
        filt.max_vertices = 3;
        long long streamed = 0;
        for_each_realization(filt, [&](const sp_tree&, const labeled_graph& lg) {
            ++streamed;
            rec.check(lg.graph.vertex_count() <= 3, "vertex filter leaked a large graph");
        });
        long long manual = 0;
        filt.max_vertices.reset();
        for_each_realization(filt, [&](const sp_tree&, const labeled_graph& lg) {
            if (lg.graph.vertex_count() <= 3) ++manual;
        });
        rec.check(streamed == manual, "vertex filter disagrees with post-filtering");
    }
}

void suite_witness_validity(verify_context& ctx, recorder& rec) {
    auto audit = [&](const multigraph& g, const toughness_value& tau, const std::string& what) {
        bool connected = g.vertex_count() > 0 && components(g, {}) == 1;
        rec.check((tau.kind == tough_kind::zero) == !connected,
                  [&] { return what + ": zero kind disagrees with connectivity"; });
        rec.check((tau.kind == tough_kind::infinite) == (connected && underlying_complete(g)),
                  [&] { return what + ": infinite kind disagrees with completeness"; });
        if (!tau.finite()) return;

        const std::vector<int>& w = tau.witness;
        bool sorted = std::is_sorted(w.begin(), w.end()) &&
                      std::adjacent_find(w.begin(), w.end()) == w.end();
        bool members = true;
        for (int v : w) members = members && g.has_vertex(v);
        int c = members && sorted ? components(g, w) : 0;
        rec.check(!w.empty() && sorted && members && c >= 2 &&
                      make_rational(static_cast<long long>(w.size()), c) == tau.value,
                  [&] { return what + ": witness " + join_ints(w) + " does not attain " +
                               to_string(tau); });

        scan_result scan = subset_scan(g);
        rec.check(scan.any_cutset && scan.best == tau.value,
                  [&] { return what + ": independent scan found " + to_string(scan.best); });

        auto sets = tough_sets(g);
        rec.check(!sets.empty() && sets.front() == w,
                  [&] { return what + ": witness is not the first tough set"; });
        for (std::size_t i = 1; i < sets.size(); ++i) {
            bool ordered = sets[i - 1].size() < sets[i].size() ||
                           (sets[i - 1].size() == sets[i].size() && sets[i - 1] < sets[i]);
            rec.check(ordered, [&] { return what + ": tough sets out of order"; });
        }
        std::set<std::vector<int>> got(sets.begin(), sets.end());
        std::set<std::vector<int>> expect(scan.attaining.begin(), scan.attaining.end());
        rec.check(got == expect,
                  [&] { return what + ": tough set family differs from the independent scan"; });
    };

    for (const universe_entry& e : ctx.entries) {
        audit(e.lg.graph, e.tau, expr_of(e));
        const minimality_verdict& v = verdict_of(e);
        rec.check(v.tau == e.tau, [&] { return expr_of(e) + ": verdict tau differs"; });
        if (v.is_minimal) {
            rec.check(!v.counterexample_edge.has_value(),
                      [&] { return expr_of(e) + ": minimal verdict carries an edge"; });
        } else if (v.tau.finite()) {
            bool ok = v.counterexample_edge.has_value();
            if (ok) {
                std::size_t id = static_cast<std::size_t>(*v.counterexample_edge);
                ok = id < e.lg.graph.edge_count() &&
                     !(toughness(without_edge(e.lg.graph, id)) < e.tau);
            }
            rec.check(ok, [&] { return expr_of(e) + ": counterexample edge invalid"; });
        }
    }
    if (ctx.opt.simple_only)
        for (const universe_entry& e : ctx.full)
            if (!e.lg.graph.simple()) audit(e.lg.graph, e.tau, expr_of(e));

    audit(closed_bracelet(3), toughness(closed_bracelet(3)), "closed bracelet length 3");
}

void suite_monotonicity(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (!g.simple()) continue;
        for (std::size_t x = 0; x < g.vertex_count(); ++x)
            for (std::size_t y = x + 1; y < g.vertex_count(); ++y) {
                int u = g.vertex_ids[x];
                int v = g.vertex_ids[y];
                if (adjacent(g, u, v)) continue;
                multigraph larger = g;
                larger.add_edge(u, v);
                toughness_value after = toughness(larger);
                rec.check(!(after < e.tau), [&] {
                    return expr_of(e) + ": adding " + std::to_string(u) + "-" +
                           std::to_string(v) + " dropped toughness to " + to_string(after);
                });
            }
    }
}

void suite_kappa_bound(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (underlying_complete(g)) continue;
        rec.check(e.tau.finite(), [&] { return expr_of(e) + ": toughness not finite"; });
        if (!e.tau.finite()) continue;
        rec.check(!(one < e.tau.value),
                  [&] { return expr_of(e) + ": toughness above 1 at " + to_string(e.tau); });
        long long kappa = vertex_connectivity(g);
        rec.check(kappa * e.tau.value.den >= 2 * e.tau.value.num, [&] {
            return expr_of(e) + ": connectivity " + std::to_string(kappa) +
                   " below twice " + to_string(e.tau);
        });
    }
}

void suite_endpoint_exclusion(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!verdict_of(e).is_minimal) continue;
        const multigraph& g = e.lg.graph;
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
            multigraph h = without_edge(g, id);
            if (!toughness(h).finite()) continue;
            auto [a, b] = g.edges[id];
            for (const auto& s : tough_sets(h)) {
                bool avoids = !contains_vertex(s, a) && !contains_vertex(s, b);
                rec.check(avoids, [&] {
                    return expr_of(e) + ": tough set " + join_ints(s) + " of the graph minus " +
                           std::to_string(a) + "-" + std::to_string(b) + " touches an endpoint";
                });
            }
        }
    }
}

void suite_transfer(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!e.tau.finite() || e.tau.value != half) continue;
        const multigraph& g = e.lg.graph;
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
            multigraph h = without_edge(g, id);
            toughness_value th = toughness(h);
            if (!(th < e.tau) || !th.finite()) continue;
            for (const auto& s : tough_sets(h)) {
                int c = components(g, s);
                bool tough_in_g =
                    c >= 2 && make_rational(static_cast<long long>(s.size()), c) == e.tau.value;
                rec.check(tough_in_g, [&] {
                    return expr_of(e) + ": set " + join_ints(s) + " tough after deleting edge " +
                           std::to_string(id) + " but not tough before";
                });
            }
        }
    }
}

void suite_locality(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!e.tau.finite()) continue;
        const multigraph& g = e.lg.graph;
        auto sets = tough_sets(g);

        // a tough set avoiding a cut vertex stays on one side of it
        for (int v : g.vertex_ids) {
            auto sides = component_sets(g, {v});
            if (sides.size() < 2) continue;
            for (const auto& s : sets) {
                if (contains_vertex(s, v)) continue;
                int touched = 0;
                for (const auto& side : sides)
                    for (int w : s)
                        if (contains_vertex(side, w)) {
                            ++touched;
                            break;
                        }
                rec.check(touched == 1, [&] {
                    return expr_of(e) + ": tough set " + join_ints(s) + " spans " +
                           std::to_string(touched) + " sides of cut vertex " + std::to_string(v);
                });
            }
        }

        // every tough set stays on one side of a bridge
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
            auto [a, b] = g.edges[id];
            if (a == b) continue;
            multigraph h = without_edge(g, id);
            auto sides = component_sets(h, {});
            if (sides.size() != 2) continue;
            for (const auto& s : sets) {
                bool in_first = true, in_second = true;
                for (int w : s) {
                    if (!contains_vertex(sides[0], w)) in_first = false;
                    if (!contains_vertex(sides[1], w)) in_second = false;
                }
                rec.check(in_first || in_second, [&] {
                    return expr_of(e) + ": tough set " + join_ints(s) +
                           " crosses the bridge " + std::to_string(a) + "-" + std::to_string(b);
                });
            }
        }

        // a minimum-size tough set avoiding a 2-cut stays on one side of it
        if (e.tau.value < one) {
            std::size_t min_size = sets.front().size();
            for (std::size_t x = 0; x < g.vertex_count(); ++x)
                for (std::size_t y = x + 1; y < g.vertex_count(); ++y) {
                    int u = g.vertex_ids[x];
                    int v = g.vertex_ids[y];
                    auto sides = component_sets(g, {u, v});
                    if (sides.size() < 2) continue;
                    for (const auto& s : sets) {
                        if (s.size() != min_size) continue;
                        if (contains_vertex(s, u) || contains_vertex(s, v)) continue;
                        int touched = 0;
                        for (const auto& side : sides)
                            for (int w : s)
                                if (contains_vertex(side, w)) {
                                    ++touched;
                                    break;
                                }
                        rec.check(touched == 1, [&] {
                            return expr_of(e) + ": minimum tough set " + join_ints(s) +
                                   " spans the cut {" + std::to_string(u) + "," +
                                   std::to_string(v) + "}";
                        });
                    }
                }
        }
    }
}

void suite_middle_vertex(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!e.tau.finite() || !(e.tau.value < one)) continue;
        std::vector<int> middles;
        for (int i : {2, 3})
            for (const occurrence& occ :
                 match_substructures(e.tree, substructure_kind::r(i)))
                for (std::size_t k = 2; k < occ.graph_vertices.size(); ++k)
                    middles.push_back(occ.graph_vertices[k]);
        if (middles.empty()) continue;
        std::sort(middles.begin(), middles.end());
        middles.erase(std::unique(middles.begin(), middles.end()), middles.end());
        for (const auto& s : tough_sets(e.lg.graph)) {
            bool clean = true;
            for (int v : s)
                if (contains_vertex(middles, v)) clean = false;
            rec.check(clean, [&] {
                return expr_of(e) + ": tough set " + join_ints(s) + " contains a middle vertex";
            });
        }
    }
}

void suite_leaf_classification(verify_context& ctx, recorder& rec) {
    auto inspect = [&](const universe_entry& e, bool simple) {
        const sp_tree& t = e.tree;
        std::vector<int> parent = tree_parents(t);
        std::vector<int> jumps = jump_edges(t);
        std::vector<int> leaps = leap_edges(t);

        std::vector<int> both = jumps;
        both.insert(both.end(), leaps.begin(), leaps.end());
        std::sort(both.begin(), both.end());
        rec.check(std::adjacent_find(both.begin(), both.end()) == both.end(),
                  [&] { return expr_of(e) + ": jump and leap overlap"; });

        std::vector<int> parallel_parented;
        for (std::size_t id = 0; id < t.nodes.size(); ++id) {
            if (t.nodes[id].kind != node_kind::leaf) continue;
            int p = parent[id];
            if (p >= 0 && t.node(p).kind == node_kind::parallel)
                parallel_parented.push_back(static_cast<int>(id));
        }
        rec.check(both == parallel_parented,
                  [&] { return expr_of(e) + ": classification misses a parallel-parented leaf"; });

        for (int leaf : parallel_parented) {
            int p = parent[static_cast<std::size_t>(leaf)];
            bool expect_leap = p == t.root && t.node(p).children.size() == 2;
            bool got_leap = std::binary_search(leaps.begin(), leaps.end(), leaf);
            rec.check(got_leap == expect_leap,
                      [&] { return expr_of(e) + ": leaf " + std::to_string(leaf) +
                                   " classified against the definition"; });
            if (simple) {
                int series_siblings = 0;
                for (int c : t.node(p).children)
                    if (t.node(c).kind == node_kind::series) ++series_siblings;
                bool expect_jump = p != t.root || series_siblings >= 2;
                bool got_jump = std::binary_search(jumps.begin(), jumps.end(), leaf);
                rec.check(got_jump == expect_jump,
                          [&] { return expr_of(e) + ": leaf " + std::to_string(leaf) +
                                       " disagrees with the sibling-count form"; });
            }
        }
    };
    for (const universe_entry& e : ctx.entries) inspect(e, e.lg.graph.simple());
    if (ctx.opt.simple_only)
        for (const universe_entry& e : ctx.full)
            if (!e.lg.graph.simple()) inspect(e, false);

    {
        sp_tree leap_only = canonicalize(parse("P(e,S(e,e))"));
        rec.check(jump_edges(leap_only).empty() && leap_edges(leap_only).size() == 1,
                  "lone parallel leaf beside one series child");
        sp_tree rooted = canonicalize(parse("P(e,S(e,e),S(e,e))"));
        rec.check(jump_edges(rooted).size() == 1 && leap_edges(rooted).empty(),
                  "parallel root leaf with two series siblings");
        sp_tree doubled = canonicalize(parse("P(e,e)"));
        rec.check(jump_edges(doubled).empty() && leap_edges(doubled).size() == 2,
                  "doubled edge leaves");
        sp_tree proper = canonicalize(parse("S(e,P(e,S(e,e)))"));
        rec.check(jump_edges(proper).size() == 1 && leap_edges(proper).empty(),
                  "leaf under a non-root parallel node");
        sp_tree series_root = canonicalize(parse("S(e,e,e)"));
        rec.check(jump_edges(series_root).empty() && leap_edges(series_root).empty(),
                  "series root has no parallel-parented leaves");
        bool threw = false;
        try {
            jump_edges(parse("S(S(e,e),e)"));
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "jump edges of a non-canonical tree");
    }
}

void suite_jump_deletion(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!e.tau.finite() || e.tau.value < half || one < e.tau.value) continue;
        std::vector<int> parent = tree_parents(e.tree);
        for (int leaf : jump_edges(e.tree)) {
            int p = parent[static_cast<std::size_t>(leaf)];
            int gp = p >= 0 ? parent[static_cast<std::size_t>(p)] : -1;
            bool applicable =
                half < e.tau.value || (e.tau.value == half && gp >= 0 && gp != e.tree.root);
            if (!applicable) continue;
            int edge_id = e.lg.leaf_to_edge.at(leaf);
            toughness_value after =
                toughness(without_edge(e.lg.graph, static_cast<std::size_t>(edge_id)));
            rec.check(after == e.tau, [&] {
                return expr_of(e) + ": deleting jump edge " + std::to_string(edge_id) +
                       " moved toughness from " + to_string(e.tau) + " to " + to_string(after);
            });
        }
    }
}

void suite_parallel_edges(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.full) {
        const multigraph& g = e.lg.graph;
        if (!g.has_parallel_edges()) continue;
        rec.check(!verdict_of(e).is_minimal,
                  [&] { return expr_of(e) + ": multigraph judged minimal"; });

        // dropping one copy of a parallel pair never moves the toughness
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
            auto [a, b] = g.edges[id];
            int copies = 0;
            for (auto [x, y] : g.edges)
                if (std::minmax(x, y) == std::minmax(a, b)) ++copies;
            if (copies < 2) continue;
            rec.check(toughness(without_edge(g, id)) == e.tau,
                      [&] { return expr_of(e) + ": removing a parallel copy moved toughness"; });
            break;
        }
    }

    // loops neither change the toughness nor allow minimality
    int sampled = 0;
    for (const universe_entry& e : ctx.entries) {
        if (!e.lg.graph.simple() || e.lg.graph.vertex_count() < 2) continue;
        if (++sampled > 10) break;
        multigraph looped = e.lg.graph;
        looped.add_edge(looped.vertex_ids[0], looped.vertex_ids[0]);
        rec.check(toughness(looped) == e.tau,
                  [&] { return expr_of(e) + ": a loop moved the toughness"; });
        rec.check(!is_minimally_tough(looped).is_minimal,
                  [&] { return expr_of(e) + ": a looped graph judged minimal"; });
        if (e.tau.finite())
            rec.check(tough_sets(looped) == tough_sets(e.lg.graph),
                      [&] { return expr_of(e) + ": a loop changed the tough sets"; });
    }
}

void suite_reduction_tau(verify_context& ctx, recorder& rec) {
    // shape goldens
    rec.check(isomorphic(reduce(path_graph(6)), path_graph(3)), "long path collapses");
    rec.check(isomorphic(reduce(cycle_graph(6)), cycle_graph(4)), "six cycle collapses");
    rec.check(isomorphic(reduce(cycle_graph(5)), cycle_graph(4)), "five cycle collapses");
    rec.check(graphs_equal(reduce(cycle_graph(4)), cycle_graph(4)), "four cycle is fixed");
    rec.check(graphs_equal(reduce(complete_graph(3)), complete_graph(3)), "triangle is fixed");
    rec.check(graphs_equal(reduce(path_graph(3)), path_graph(3)), "short path is fixed");
    {
        bool threw = false;
        multigraph doubled;
        doubled.add_edge(0, 1);
        doubled.add_edge(0, 1);
        try {
            reduce(doubled);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "reduction of a multigraph");
        threw = false;
        multigraph split;
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        try {
            reduce(split);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "reduction of a disconnected graph");
    }

    // a pearl chain with long arms collapses to the necklace with the same pearls
    {
        sp_tree chain = canonicalize(parse("S(e,P(S(e,e),S(e,e,e)),P(S(e,e,e),S(e,e,e)),e)"));
        multigraph reduced = reduce(realize(chain).graph);
        rec.check(isomorphic(reduced, necklace_graph({false, true, true, false})),
                  "pearl chain does not collapse to its necklace");
        auto members = is_pearl_chain(reduced);
        int pearls = 0;
        if (members)
            for (const chain_component& m : *members)
                if (!m.edge) ++pearls;
        rec.check(members.has_value() && pearls == 2, "pearl count changed by reduction");
    }

    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (!g.simple()) continue;
        multigraph r = reduce(g);
        rec.check(reduction_steps(r).empty(), [&] { return expr_of(e) + ": reduce not a fixpoint"; });
        rec.check(graphs_equal(reduce(r), r), [&] { return expr_of(e) + ": reduce not idempotent"; });
        rec.check(components(r, {}) == 1, [&] { return expr_of(e) + ": reduce disconnected the graph"; });
        if (e.tau.finite() && e.tau.value < one) {
            rec.check(toughness(r) == e.tau, [&] {
                return expr_of(e) + ": reduction moved toughness to " + to_string(toughness(r));
            });
            rec.check(is_minimally_tough(r).is_minimal == verdict_of(e).is_minimal,
                      [&] { return expr_of(e) + ": reduction flipped minimality"; });
        }
    }
}

void suite_confluence(verify_context& ctx, recorder& rec) {
    auto signature = [](const multigraph& g) {
        std::ostringstream out;
        for (int v : g.vertex_ids) out << v << ",";
        out << "|";
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges) edges.push_back(std::minmax(a, b));
        std::sort(edges.begin(), edges.end());
        for (auto [a, b] : edges) out << a << "-" << b << ",";
        return out.str();
    };

    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (!g.simple() || g.vertex_count() > 10) continue;

        std::map<std::string, multigraph> seen;
        std::vector<multigraph> frontier{g};
        std::vector<multigraph> terminal;
        seen.emplace(signature(g), g);
        while (!frontier.empty()) {
            multigraph cur = std::move(frontier.back());
            frontier.pop_back();
            auto steps = reduction_steps(cur);
            if (steps.empty()) {
                terminal.push_back(std::move(cur));
                continue;
            }
            for (multigraph& next : steps) {
                std::string key = signature(next);
                if (seen.find(key) != seen.end()) continue;
                seen.emplace(std::move(key), next);
                frontier.push_back(std::move(next));
            }
        }

        multigraph canonical_form = reduce(g);
        rec.check(!terminal.empty(), [&] { return expr_of(e) + ": no terminal reduction state"; });
        for (const multigraph& t : terminal)
            rec.check(isomorphic(t, canonical_form), [&] {
                return expr_of(e) + ": a maximal reduction order ends off the fixpoint";
            });
    }
}

void suite_forbidden_substructures(verify_context& ctx, recorder& rec) {
    const substructure_kind forbidden[] = {
        substructure_kind::r(4), substructure_kind::q2(), substructure_kind::rr(3, 3),
        substructure_kind::rr(3, 2), substructure_kind::rr(3, 1)};

    for (const universe_entry& e : ctx.entries) {
        bool minimal_half = verdict_of(e).is_minimal && e.tau.finite() && e.tau.value == half;
        for (const substructure_kind& kind : forbidden) {
            if (match_substructures(e.tree, kind).empty()) continue;
            rec.check(!minimal_half, [&] {
                return expr_of(e) + ": minimally 1/2-tough despite containing " + to_string(kind);
            });
        }
        if (minimal_half) {
            for (const occurrence& occ :
                 match_substructures(e.tree, substructure_kind::rr(2, 1))) {
                bool rooted = occ.tree_node == e.tree.root;
                int cut = occ.graph_vertices[0];
                bool cuts = components(e.lg.graph, {cut}) >= 2;
                rec.check(rooted && cuts, [&] {
                    return expr_of(e) + ": hosted pattern breaks the root-and-cut-vertex rule";
                });
            }
        }
    }

    minimality_verdict k24 = is_minimally_tough(complete_bipartite_graph(2, 4));
    rec.check(!k24.is_minimal && k24.tau.finite() && k24.tau.value == half,
              "two by four bipartite survives as minimal");
}

void suite_height_law(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (!g.simple()) continue;
        if (!verdict_of(e).is_minimal || !e.tau.finite() || e.tau.value != half) continue;
        if (!reduction_steps(g).empty()) continue;
        int h = node_height(e.tree, e.tree.root);
        rec.check(h == 1 || h == 3,
                  [&] { return expr_of(e) + ": reduced tree height " + std::to_string(h); });
        rec.check(!match_substructures(e.tree, substructure_kind::necklace()).empty(),
                  [&] { return expr_of(e) + ": reduced minimal graph is not a necklace"; });
    }
}

void suite_necklace_family(verify_context& ctx, recorder& rec) {
    // among reduced graphs, pearl chains and necklaces coincide
    for (const universe_entry& e : ctx.entries) {
        const multigraph& g = e.lg.graph;
        if (!g.simple()) continue;
        if (!reduction_steps(g).empty()) continue;
        bool chain = is_pearl_chain(g).has_value();
        bool neck = !match_substructures(e.tree, substructure_kind::necklace()).empty();
        rec.check(chain == neck, [&] {
            return expr_of(e) + ": pearl-chain and necklace tests disagree on a reduced graph";
        });
    }

    // every necklace within the cap is minimal at 1/2, and each deletion
    // either disconnects or drops the toughness to at most 1/3
    std::vector<std::vector<bool>> shapes;
    for (int members = 2; members <= 13; ++members) {
        int middle = members - 2;
        for (unsigned bits = 0; bits < (1u << middle); ++bits) {
            std::vector<bool> shape(static_cast<std::size_t>(members), false);
            int pearls = 0;
            for (int i = 0; i < middle; ++i)
                if (bits >> i & 1u) {
                    shape[static_cast<std::size_t>(i + 1)] = true;
                    ++pearls;
                }
            if (members + 1 + 2 * pearls <= 14) shapes.push_back(std::move(shape));
        }
    }
    for (const std::vector<bool>& shape : shapes) {
        multigraph g = necklace_graph(shape);
        minimality_verdict v = is_minimally_tough(g);
        rec.check(v.is_minimal && v.tau.finite() && v.tau.value == half, [&] {
            std::string desc;
            for (bool pearl : shape) desc += pearl ? 'R' : 'E';
            return "necklace " + desc + " is not minimally 1/2-tough";
        });
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
            toughness_value after = toughness(without_edge(g, id));
            bool ok = after.kind == tough_kind::zero ||
                      (after.finite() && !(one_third < after.value));
            rec.check(ok, [&] {
                std::string desc;
                for (bool pearl : shape) desc += pearl ? 'R' : 'E';
                return "necklace " + desc + ": deleting edge " + std::to_string(id) +
                       " left toughness " + to_string(after);
            });
        }
    }
}

void suite_degree_bound(verify_context& ctx, recorder& rec) {
    for (const universe_entry& e : ctx.entries) {
        if (!verdict_of(e).is_minimal) continue;
        if (!e.tau.finite() || e.tau.value < half) continue;
        long long target = (2 * e.tau.value.num + e.tau.value.den - 1) / e.tau.value.den;
        bool found = false;
        for (int v : e.lg.graph.vertex_ids)
            if (e.lg.graph.degree(v) == target) found = true;
        rec.check(found, [&] {
            return expr_of(e) + ": no vertex of degree " + std::to_string(target) +
                   " despite minimal toughness " + to_string(e.tau);
        });
    }
}

void suite_classifier_oracle(verify_context& ctx, recorder& rec) {
    auto validate = [&](const universe_entry& e) {
        const multigraph& g = e.lg.graph;
        classification_report report = classify(g);
        rec.check(report.tau == e.tau, [&] { return expr_of(e) + ": classifier tau differs"; });

        verdict expected;
        if (!g.simple() || underlying_complete(g))
            expected = verdict::not_applicable;
        else if (e.tau.finite() && e.tau.value < half)
            expected = verdict::out_of_scope;
        else
            expected = verdict_of(e).is_minimal ? verdict::minimally_tough
                                                : verdict::not_minimally_tough;
        rec.check(report.result == expected,
                  [&] { return expr_of(e) + ": classifier verdict disagrees with the oracle (" +
                               report.reason + ")"; });
        if (report.result != expected) return;

        if (report.result == verdict::minimally_tough) {
            rec.check(e.tau.finite() && !(e.tau.value < half) && !(one < e.tau.value),
                      [&] { return expr_of(e) + ": minimal verdict out of the covered range"; });
            if (e.tau.value == one) {
                const auto* cert = std::get_if<cycle_certificate>(&report.evidence);
                rec.check(cert && cert->length == static_cast<int>(g.vertex_count()) &&
                              is_cycle(g),
                          [&] { return expr_of(e) + ": cycle evidence invalid"; });
            } else if (e.tau.value == half) {
                const auto* chain = std::get_if<pearl_chain>(&report.evidence);
                auto direct = is_pearl_chain(g);
                rec.check(chain && direct && *chain == *direct,
                          [&] { return expr_of(e) + ": pearl chain evidence invalid"; });
            } else {
                rec.check(report.tree && jump_edges(*report.tree).empty(),
                          [&] { return expr_of(e) + ": jump edges under a minimal verdict"; });
            }
        } else if (report.result == verdict::not_minimally_tough) {
            if (const auto* jump = std::get_if<jump_edge_evidence>(&report.evidence)) {
                bool ok = jump->edge_id >= 0 &&
                          jump->edge_id < static_cast<int>(g.edge_count()) &&
                          toughness(without_edge(g, static_cast<std::size_t>(jump->edge_id))) ==
                              e.tau;
                rec.check(ok, [&] { return expr_of(e) + ": jump edge evidence invalid"; });
            } else if (const auto* edge = std::get_if<non_decreasing_edge>(&report.evidence)) {
                bool ok = edge->edge_id >= 0 &&
                          edge->edge_id < static_cast<int>(g.edge_count()) &&
                          !(toughness(without_edge(g, static_cast<std::size_t>(edge->edge_id))) <
                            e.tau);
                rec.check(ok, [&] { return expr_of(e) + ": non-decreasing edge evidence invalid"; });
            } else if (const auto* occ = std::get_if<occurrence>(&report.evidence)) {
                bool ok = report.tree &&
                          !match_substructures(*report.tree, occ->kind).empty();
                rec.check(ok, [&] { return expr_of(e) + ": substructure evidence invalid"; });
            } else {
                rec.check(false, [&] { return expr_of(e) + ": non-minimal verdict without evidence"; });
            }
        }
    };

    for (const universe_entry& e : ctx.entries) validate(e);
    if (ctx.opt.simple_only)
        for (const universe_entry& e : ctx.full)
            if (!e.lg.graph.simple()) validate(e);

    // fixed instances
    {
        classification_report p3 = classify(path_graph(3));
        const auto* chain = std::get_if<pearl_chain>(&p3.evidence);
        rec.check(p3.result == verdict::minimally_tough && chain && chain->size() == 2 &&
                      (*chain)[0].edge && (*chain)[1].edge,
                  "short path classification");

        rec.check(classify(cycle_graph(7)).result == verdict::minimally_tough,
                  "seven cycle classification");
        classification_report c6 = classify(realize(parse("S(e,e,e)")).graph);
        rec.check(c6.result == verdict::minimally_tough, "four path classification");

        classification_report k23 = classify(complete_bipartite_graph(2, 3));
        rec.check(k23.result == verdict::minimally_tough && k23.tau.finite() &&
                      k23.tau.value == make_rational(2, 3),
                  "two by three bipartite classification");

        classification_report q2 =
            classify(realize(canonicalize(parse("S(e,P(e,S(e,e)),e)"))).graph);
        const auto* occ = std::get_if<occurrence>(&q2.evidence);
        rec.check(q2.result == verdict::not_minimally_tough && q2.tau.value == half && occ &&
                      occ->kind == substructure_kind::q2(),
                  "triangle with tails classification");

        classification_report r4 = classify(complete_bipartite_graph(2, 4));
        const auto* occ4 = std::get_if<occurrence>(&r4.evidence);
        rec.check(r4.result == verdict::not_minimally_tough && occ4 &&
                      occ4->kind == substructure_kind::r(4),
                  "two by four bipartite classification");

        rec.check(classify(complete_graph(3)).result == verdict::not_applicable &&
                      classify(path_graph(2)).result == verdict::not_applicable &&
                      classify(complete_graph(1)).result == verdict::not_applicable,
                  "complete graphs are outside the theory");
        multigraph doubled;
        doubled.add_edge(0, 1);
        doubled.add_edge(0, 1);
        rec.check(classify(doubled).result == verdict::not_applicable, "doubled edge gate");
        multigraph looped = path_graph(3);
        looped.add_edge(0, 0);
        rec.check(classify(looped).result == verdict::not_applicable, "loop gate");

        classification_report low =
            classify(realize(canonicalize(parse("S(e,P(S(e,e),S(e,e),S(e,e)),e)"))).graph);
        rec.check(low.result == verdict::out_of_scope && low.tau.finite() &&
                      low.tau.value == make_rational(2, 5),
                  "toughness below the covered range");

        rec.check(classify(complete_graph(4)).result == verdict::not_applicable,
                  "the complete gate runs before decomposition");

        multigraph prism;
        prism.add_edge(0, 1);
        prism.add_edge(1, 2);
        prism.add_edge(0, 2);
        prism.add_edge(3, 4);
        prism.add_edge(4, 5);
        prism.add_edge(3, 5);
        prism.add_edge(0, 3);
        prism.add_edge(1, 4);
        prism.add_edge(2, 5);
        bool threw = false;
        try {
            classify(prism);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "classify accepted a non-series-parallel graph");
        threw = false;
        multigraph split;
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        try {
            classify(split);
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "classify accepted a disconnected graph");
        threw = false;
        try {
            classify(multigraph{});
        } catch (const domain_error&) {
            threw = true;
        }
        rec.check(threw, "classify accepted the empty graph");
    }
}

// ==================== SUITE TABLE ====================

using suite_fn = void (*)(verify_context&, recorder&);

struct registered_suite {
    const char* name;
    suite_fn fn;
};

const registered_suite suite_table[] = {
    {"golden_values", suite_golden_values},
    {"mediant_inequality", suite_mediant_inequality},
    {"parser_roundtrip", suite_parser_roundtrip},
    {"canonical_realize", suite_canonical_realize},
    {"encode_complete", suite_encode_complete},
    {"recognize_roundtrip", suite_recognize_roundtrip},
    {"enum_universe", suite_enum_universe},
    {"witness_validity", suite_witness_validity},
    {"monotonicity", suite_monotonicity},
    {"kappa_bound", suite_kappa_bound},
    {"endpoint_exclusion", suite_endpoint_exclusion},
    {"transfer", suite_transfer},
    {"locality", suite_locality},
    {"middle_vertex", suite_middle_vertex},
    {"leaf_classification", suite_leaf_classification},
    {"jump_deletion", suite_jump_deletion},
    {"parallel_edges", suite_parallel_edges},
    {"reduction_tau", suite_reduction_tau},
    {"confluence", suite_confluence},
    {"forbidden_substructures", suite_forbidden_substructures},
    {"height_law", suite_height_law},
    {"necklace_family", suite_necklace_family},
    {"degree_bound", suite_degree_bound},
    {"classifier_oracle", suite_classifier_oracle},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const registered_suite& s : suite_table) names.emplace_back(s.name);
    return names;
}

verify_report run_verify(const verify_options& options) {
    std::set<std::string> selected(options.suites.begin(), options.suites.end());
    for (const std::string& name : selected) {
        bool known = false;
        for (const registered_suite& s : suite_table) known = known || name == s.name;
        if (!known) throw domain_error("unknown suite: " + name);
    }

    verify_context ctx;
    ctx.opt = options;
    ctx.full = build_universe(options.max_leaves, false);
    if (options.simple_only) {
        ctx.entries = build_universe(options.max_leaves, true);
    } else {
        ctx.entries = ctx.full;
    }

    verify_report report;
    report.universe_size = static_cast<long long>(ctx.entries.size());
    for (const registered_suite& s : suite_table) {
        if (!selected.empty() && selected.find(s.name) == selected.end()) continue;
        recorder rec;
        rec.result.name = s.name;
        auto start = std::chrono::steady_clock::now();
        s.fn(ctx, rec);
        auto stop = std::chrono::steady_clock::now();
        rec.result.seconds = std::chrono::duration<double>(stop - start).count();
        report.suites.push_back(std::move(rec.result));
    }
    return report;
}

}  // namespace sptough
