#include "sptough/toughness.hpp"

#include <bit>
#include <cstdint>

#include "sptough/errors.hpp"

namespace sptough {

std::string to_string(const toughness_value& t) {
    switch (t.kind) {
        case tough_kind::zero: return "0";
        case tough_kind::infinite: return "inf";
        case tough_kind::finite: return to_string(t.value);
    }
    return "?";
}

namespace {

constexpr std::size_t max_exact_vertices = 24;

std::vector<std::uint32_t> adjacency_masks(const multigraph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const auto& [a, b] : g.edges) {
        if (a == b) continue;
        auto ia = g.index_of(a);
        auto ib = g.index_of(b);
        adj[ia] |= std::uint32_t{1} << ib;
        adj[ib] |= std::uint32_t{1} << ia;
    }
    return adj;
}

int mask_components(const std::vector<std::uint32_t>& adj, std::uint32_t present) {
    int count = 0;
    std::uint32_t rem = present;
    while (rem) {
        ++count;
        std::uint32_t comp = rem & (~rem + 1);
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t bits = frontier;
            while (bits) {
                next |= adj[static_cast<std::size_t>(std::countr_zero(bits))];
                bits &= bits - 1;
            }
            next &= present & ~comp;
            comp |= next;
            frontier = next;
        }
        rem &= ~comp;
    }
    return count;
}

// Visits every vertex subset of each size k = 1..n-2 in size-then-lexicographic
// order over dense positions. The callback receives the positions and the
// component count of the complement; return false from it to stop.
template <typename F>
void scan_cutsets(const multigraph& g, F&& visit) {
    std::size_t n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << n) - 1;
    std::vector<int> idx;
    for (std::size_t k = 1; n >= 2 && k <= n - 2; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= std::uint32_t{1} << i;
            int c = mask_components(adj, full & ~mask);
            if (!visit(idx, c)) return;
            // advance to the next combination in lex order
            std::size_t pos = k;
            while (pos > 0 &&
                   idx[pos - 1] == static_cast<int>(n - k + pos - 1))
                --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

void check_exact_limits(const multigraph& g) {
    if (g.vertex_count() == 0) throw domain_error("empty graph has no toughness");
    if (g.vertex_count() > max_exact_vertices)
        throw capacity_error("exact toughness supports at most " +
                             std::to_string(max_exact_vertices) + " vertices");
}

}  // namespace

toughness_value toughness(const multigraph& g) {
    check_exact_limits(g);
    if (underlying_complete(g)) return toughness_value::make_infinite();
    if (components(g, {}) != 1) return toughness_value::make_zero();

    std::int64_t best_num = -1, best_den = 1;
    std::vector<int> best;
    scan_cutsets(g, [&](const std::vector<int>& idx, int c) {
        if (c >= 2) {
            auto k = static_cast<std::int64_t>(idx.size());
            if (best_num < 0 || k * best_den < best_num * c) {
                best_num = k;
                best_den = c;
                best = idx;
            }
        }
        return true;
    });
    // A connected noncomplete graph always has a cutset.
    std::vector<int> witness;
    witness.reserve(best.size());
    for (int i : best) witness.push_back(g.vertex_ids[static_cast<std::size_t>(i)]);
    return toughness_value::make_finite(make_rational(best_num, best_den),
                                        std::move(witness));
}

std::vector<std::vector<int>> tough_sets(const multigraph& g) {
    toughness_value t = toughness(g);
    if (!t.finite())
        throw domain_error("tough sets are only defined for finite toughness");
    std::vector<std::vector<int>> result;
    scan_cutsets(g, [&](const std::vector<int>& idx, int c) {
        if (c >= 2 &&
            static_cast<std::int64_t>(idx.size()) * t.value.den ==
                t.value.num * c) {
            std::vector<int> s;
            s.reserve(idx.size());
            for (int i : idx) s.push_back(g.vertex_ids[static_cast<std::size_t>(i)]);
            result.push_back(std::move(s));
        }
        return true;
    });
    return result;
}

minimality_verdict is_minimally_tough(const multigraph& g) {
    toughness_value t = toughness(g);
    if (!t.finite()) return {false, t, std::nullopt};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        toughness_value reduced = toughness(without_edge(g, e));
        if (!(reduced < t)) return {false, t, static_cast<int>(e)};
    }
    return {true, t, std::nullopt};
}

int vertex_connectivity(const multigraph& g) {
    check_exact_limits(g);
    std::size_t n = g.vertex_count();
    if (underlying_complete(g)) return static_cast<int>(n) - 1;
    if (components(g, {}) != 1) return 0;
    int best = static_cast<int>(n);
    scan_cutsets(g, [&](const std::vector<int>& idx, int c) {
        if (c >= 2) {
            best = static_cast<int>(idx.size());
            return false;  // sizes ascend, the first hit is minimum
        }
        return true;
    });
    return best;
}

}  // namespace sptough
