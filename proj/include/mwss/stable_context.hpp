// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_STABLE_CONTEXT_HPP
#define MWSS_STABLE_CONTEXT_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mwss/graph.hpp"

namespace mwss {

// Classification of every node against a maximal stable set S. In a
// claw-free graph a node outside S has at most two stable neighbors.
struct NodeClass {
    enum Kind : unsigned char { Stable, Free, Bound, Superfree };
    std::vector<Kind> kind;
    // stable neighbors; [0] is the unique one for free nodes, both set for
    // bound nodes, -1 otherwise
    std::vector<std::array<int, 2>> snbr;

    bool is_free(int v) const { return kind[v] == Free; }
    bool is_bound(int v) const { return kind[v] == Bound; }
    bool is_stable(int v) const { return kind[v] == Stable; }
    int stable_of(int v) const { return snbr[v][0]; } // S(v) for free v
};

NodeClass classify(const WeightedGraph& g, const Bitset& s);

// Wings W(s,t) = W^B(s,t) u W^F(s,t) u W^F(t,s), with the bound part shared
// and the free parts ordered. Keys are (min index, max index).
struct Wing {
    int s, t; // s < t
    Bitset bound;      // W^B(s,t)
    Bitset free_st;    // W^F(s,t): free nodes of s with a free neighbor of t
    Bitset free_ts;    // W^F(t,s)
    Bitset all() const {
        Bitset b = bound;
        b |= free_st;
        b |= free_ts;
        return b;
    }
};

struct WingMap {
    std::vector<Wing> wings;
    std::map<std::pair<int, int>, int> index;           // (s,t) -> wings[]
    std::vector<std::vector<int>> wings_of_stable;      // per stable node
    std::vector<int> wing_count;                        // k_s
    // one wing per non-stable node (-1 for inner free / superfree nodes)
    std::vector<int> wing_of;
    Bitset outer; // outer free nodes (per their stable neighbor)

    const Wing* wing_between(int s, int t) const {
        auto it = index.find({std::min(s, t), std::max(s, t)});
        return it == index.end() ? nullptr : &wings[it->second];
    }
};

WingMap wings(const WeightedGraph& g, const Bitset& s, const NodeClass& cls);

// Similarity classes of V \ S, the free dissimilarity graph, and the family
// of free components (components of G_F inducing maximal cliques).
struct FreeStructure {
    std::vector<Bitset> gf_components;      // components of G_F restricted to free nodes
    std::vector<int> component_of;          // per node, -1 if not free
    std::vector<int> family;                // indices of components in the family
    std::vector<char> is_free_component;    // per component
    std::vector<int> classes_met;           // distinct similarity classes per component
};

FreeStructure free_components(const WeightedGraph& g, const Bitset& s, const NodeClass& cls);

// Per regular stable node, two maximal cliques covering N[s].
struct SCover {
    struct Entry {
        int s = -1;
        Bitset c;     // C_s
        Bitset cbar;  // C_s bar (may equal c)
    };
    std::vector<Entry> entries;
    std::vector<int> entry_of; // per stable node, -1 if irregular
};

SCover s_cover(const WeightedGraph& g, const Bitset& s, const NodeClass& cls);

// Greedy maximal stable set: descending weight, ties by smallest tag.
Bitset greedy_maximal_stable_set(const WeightedGraph& g);

// Extend `s` to a maximal stable set greedily (same order).
Bitset maximalize(const WeightedGraph& g, Bitset s);

// Canonicalization: repeat (a) resolve an augmenting P3, re-maximalize;
// (b) swap in a dominating free node. The dominating swap is guarded so
// adjacent-twin pairs flip at most once, which keeps the procedure
// terminating even off twin-free inputs.
Bitset canonicalize(const WeightedGraph& g, Bitset s0);

// Everything the reduction phases need about one graph + stable set.
struct StableContext {
    Bitset s;
    NodeClass cls;

    static StableContext build(const WeightedGraph& g, Bitset s);
    void refresh(const WeightedGraph& g) { cls = classify(g, s); }
};

} // namespace mwss

#endif
