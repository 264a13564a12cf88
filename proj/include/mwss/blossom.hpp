// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_BLOSSOM_HPP
#define MWSS_BLOSSOM_HPP

#include <vector>

#include "mwss/graph.hpp"

namespace mwss {

// Weighted multigraph for the matching stage. Parallel edges are allowed;
// edge ids are positions in `edges`.
struct MatchingInstance {
    struct Edge {
        int u = 0, v = 0;
        Weight w = 0;
    };
    int n = 0;
    std::vector<Edge> edges;

    int add_edge(int u, int v, Weight w) {
        edges.push_back({u, v, w});
        return static_cast<int>(edges.size()) - 1;
    }
};

struct MatchingSolution {
    Weight weight = 0;
    std::vector<int> edge_ids;        // selected edges, ascending
    std::vector<int> mate;            // per node, matched node or -1
};

// Maximum weight matching (not necessarily perfect nor maximal), primal-dual
// with blossom shrinking. Negative edges are never selected. Deterministic
// for a fixed instance; parallel edges collapse to the heaviest (smallest id
// on ties).
MatchingSolution max_weight_matching(const MatchingInstance& instance);

} // namespace mwss

#endif
