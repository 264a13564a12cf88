// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_ORACLE_HPP
#define MWSS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mwss/graph.hpp"

namespace mwss {

// Ground-truth engines and definition checkers. Everything here trades speed
// for directness: quantifiers are evaluated as written.

struct MwssResult {
    Weight weight = 0;
    std::vector<Tag> set; // sorted tags
};

// Maximum-weight stable set containing forced_in and avoiding forced_out.
// Branch and bound with a greedy clique-cover bound; ties resolve to the
// lexicographically smallest tag set. Guard: at most `guard` free nodes.
MwssResult brute_mwss(const WeightedGraph& g,
                      const std::vector<Tag>& forced_in = {},
                      const std::vector<Tag>& forced_out = {},
                      int guard = 32);

struct WeightedEdge {
    int u = 0, v = 0;
    Weight w = 0;
};

struct BruteMatchingResult {
    Weight weight = 0;
    std::vector<int> edge_indices; // sorted indices into the input list
};

// Exhaustive maximum-weight matching; at most 16 edges.
BruteMatchingResult brute_matching(const std::vector<WeightedEdge>& edges);

// Canonical stable set check: s maximal (required), no augmenting P3, no
// dominating free node.
bool check_canonical(const WeightedGraph& g, const Bitset& s);

// Liftability of (q, partition): weak normality, no cross-part paw base with
// apex outside q, no cross-triple common neighbor.
bool check_liftable(const WeightedGraph& g, const Bitset& q,
                    const std::vector<Bitset>& partition);

// Basic-structure check: every component of g - m that is not an M-clique
// has at most 2 matched nodes and is {claw,net}-free or has alpha <= 3 off
// the matching.
bool check_basic(const WeightedGraph& g, const std::vector<std::pair<int, int>>& m);

bool is_m_clique(const WeightedGraph& g, const Bitset& c,
                 const std::vector<std::pair<int, int>>& m);

// ---------------------------------------------------------------------------
// instance generators

enum class GenKind { LineGraph, CircularInterval, MixedClawFree };

struct GenModel {
    GenKind kind = GenKind::LineGraph;
    int n = 10;              // target node count
    Weight wmin = 1, wmax = 100;
    std::uint64_t seed = 1;
};

WeightedGraph gen_instance(const GenModel& model);

// The root multigraph behind a LineGraph-model instance (same seed, same
// stream): nv vertices, one weighted edge per output node. The instance's
// MWSS weight equals the root's maximum weight matching, which gives an
// independent check at sizes the subset oracle cannot reach.
struct LineGraphRoot {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> weights;
};

LineGraphRoot line_graph_root(const GenModel& model);

// Line graph of a multigraph given as an edge list on vertices 0..nv-1;
// output node i corresponds to root edge i, tags 1..m.
WeightedGraph line_graph_of(int nv, const std::vector<std::pair<int, int>>& root_edges,
                            const std::vector<Weight>& weights = {});

// n points on a circle; nodes adjacent iff covered by a common arc
// (arc = (start, length), covering start..start+length mod n).
WeightedGraph circular_interval_graph(int n, const std::vector<std::pair<int, int>>& arcs,
                                      const std::vector<Weight>& weights = {});

} // namespace mwss

#endif
