// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_TEST_SUPPORT_HPP
#define MWSS_TEST_SUPPORT_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "mwss/graph.hpp"
#include "mwss/rng.hpp"

namespace mwss::testing {

// Build a graph from 1-based edge pairs; n nodes tagged 1..n, unit weights
// unless given.
inline WeightedGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<Weight>& weights = {}) {
    WeightedGraph g;
    for (int i = 1; i <= n; ++i)
        g.add_node(i, weights.empty() ? 1 : weights[i - 1]);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

inline WeightedGraph path(int n, const std::vector<Weight>& w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    return graph_of(n, e, w);
}

inline WeightedGraph cycle(int n, const std::vector<Weight>& w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({n, 1});
    return graph_of(n, e, w);
}

inline WeightedGraph complete(int n, const std::vector<Weight>& w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
    return graph_of(n, e, w);
}

// hub tagged 1, rim 2..6
inline WeightedGraph wheel5(const std::vector<Weight>& w = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= 6; ++i) e.push_back({1, i});
    for (int i = 2; i <= 5; ++i) e.push_back({i, i + 1});
    e.push_back({6, 2});
    return graph_of(6, e, w);
}

// triangle 1,2,3 with pendants 4-1, 5-2, 6-3
inline WeightedGraph net_graph(const std::vector<Weight>& w = {}) {
    return graph_of(6, {{1, 2}, {1, 3}, {2, 3}, {4, 1}, {5, 2}, {6, 3}}, w);
}

// triangle 1,2,3 plus pendants 4-1, 5-2
inline WeightedGraph bull(const std::vector<Weight>& w = {}) {
    return graph_of(5, {{1, 2}, {1, 3}, {2, 3}, {4, 1}, {5, 2}}, w);
}

// Exhaustive MWSS over all subsets; the independent second oracle used by
// tests. n <= ~20.
inline std::pair<Weight, std::vector<Tag>> enumerate_mwss(const WeightedGraph& g) {
    int n = g.node_count();
    Weight best = 0;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        Weight w = 0;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            w += g.weight(i);
            for (int j = i + 1; j < n; ++j)
                if ((mask >> j & 1) && g.adjacent(i, j)) { ok = false; break; }
        }
        if (ok && w > best) { best = w; best_mask = mask; }
    }
    std::vector<Tag> set;
    for (int i = 0; i < n; ++i)
        if (best_mask >> i & 1) set.push_back(g.tag(i));
    return {best, set};
}

// All maximal cliques, Bron-Kerbosch with pivoting; deterministic order.
inline void bron_kerbosch(const WeightedGraph& g, Bitset r, Bitset p, Bitset x,
                          std::vector<Bitset>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    Bitset px = p | x;
    int pivot = -1, best = -1;
    px.for_each([&](int u) {
        int c = g.adj(u).count_and(p);
        if (c > best) { best = c; pivot = u; }
    });
    Bitset cand = p - g.adj(pivot);
    for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
        Bitset r2 = r; r2.set(v);
        bron_kerbosch(g, r2, p & g.adj(v), x & g.adj(v), out);
        p.reset(v);
        x.set(v);
    }
}

inline std::vector<Bitset> all_maximal_cliques(const WeightedGraph& g) {
    std::vector<Bitset> out;
    bron_kerbosch(g, Bitset(g.node_count()), g.full_set(), Bitset(g.node_count()), out);
    return out;
}

// random simple graph with edge probability num/den, weights in [wlo, whi]
inline WeightedGraph random_graph(int n, int num, int den, SplitMix64& rng,
                                  Weight wlo = 1, Weight whi = 10) {
    WeightedGraph g;
    for (int i = 1; i <= n; ++i) g.add_node(i, rng.range(wlo, whi));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num))
                g.add_edge(i, j);
    return g;
}

inline bool claw_free_by_enumeration(const WeightedGraph& g) {
    int n = g.node_count();
    for (int w = 0; w < n; ++w)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    if (a == w || b == w || c == w) continue;
                    if (g.adjacent(w, a) && g.adjacent(w, b) && g.adjacent(w, c) &&
                        !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c))
                        return false;
                }
    return true;
}

} // namespace mwss::testing

#endif
