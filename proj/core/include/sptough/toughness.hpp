#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptough/multigraph.hpp"
#include "sptough/rational.hpp"

namespace sptough {

// Toughness of a graph G is min |S| / c(G - S) over all vertex sets S whose
// removal leaves at least two components. Complete graphs admit no such S and
// get the infinite value; disconnected graphs get zero.
enum class tough_kind { zero, finite, infinite };

struct toughness_value {
    tough_kind kind = tough_kind::zero;
    rational value{};          // meaningful only when kind == finite
    std::vector<int> witness;  // a minimizing set when finite, ascending ids

    static toughness_value make_zero() { return {tough_kind::zero, {}, {}}; }
    static toughness_value make_infinite() { return {tough_kind::infinite, {}, {}}; }
    static toughness_value make_finite(rational v, std::vector<int> w) {
        return {tough_kind::finite, v, std::move(w)};
    }

    bool finite() const { return kind == tough_kind::finite; }

    // Witnesses are certificates, not part of the value.
    friend bool operator==(const toughness_value& a, const toughness_value& b) {
        if (a.kind != b.kind) return false;
        return a.kind != tough_kind::finite || a.value == b.value;
    }
    friend bool operator<(const toughness_value& a, const toughness_value& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.kind == tough_kind::finite && a.value < b.value;
    }
    friend bool operator<=(const toughness_value& a, const toughness_value& b) {
        return a < b || a == b;
    }
};

std::string to_string(const toughness_value& t);  // "0", "inf", or "num/den"

struct minimality_verdict {
    bool is_minimal = false;
    toughness_value tau;
    // First edge id whose removal fails to lower the toughness; absent when
    // the graph is minimal or when tau is not finite.
    std::optional<int> counterexample_edge;
};

// Exact brute-force toughness. The witness is the first minimizing set in
// size-then-lexicographic order over the sorted vertex ids. Graphs with more
// than 24 vertices are rejected with capacity_error; the empty graph with
// domain_error.
toughness_value toughness(const multigraph& g);

// Every set attaining the toughness ratio, in size-then-lexicographic order.
// Only defined for finite toughness; zero or infinite raises domain_error.
std::vector<std::vector<int>> tough_sets(const multigraph& g);

// A graph is minimally t-tough when deleting any single edge strictly lowers
// its toughness. Zero or infinite toughness is never minimal and yields no
// counterexample edge.
minimality_verdict is_minimally_tough(const multigraph& g);

// Brute-force vertex connectivity: n - 1 for complete graphs, 0 for
// disconnected ones, otherwise the smallest cutset size. Same caps as
// toughness.
int vertex_connectivity(const multigraph& g);

}  // namespace sptough
