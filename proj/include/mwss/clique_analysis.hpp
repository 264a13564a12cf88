// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_CLIQUE_ANALYSIS_HPP
#define MWSS_CLIQUE_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "mwss/graph.hpp"
#include "mwss/stable_context.hpp"

namespace mwss {

// u, v non-adjacent neighbors of q are q-distant iff they share no node of q.
bool q_distant(const WeightedGraph& g, const Bitset& q, int u, int v);

// every two non-adjacent nodes of N(q) are q-distant
bool is_weakly_normal(const WeightedGraph& g, const Bitset& q);

// q has three independent, mutually q-distant neighbors
bool is_normal(const WeightedGraph& g, const Bitset& q);

// uv is rigid iff some non-adjacent pair {x,y} is universal to {u,v}
bool is_rigid_edge(const WeightedGraph& g, int u, int v);

enum class CliqueOrigin { Cover, CoverBar, FreeComponent, Lifted };

// Weakly normal candidate cliques drawn from the S-cover and the free
// component family. Each node appears in at most 4 entries.
struct CandidateList {
    struct Entry {
        Bitset nodes;
        CliqueOrigin origin;
        int stable_node = -1;   // the unique stable member, -1 for free components
        bool alive = true;
    };
    std::vector<Entry> entries;

    int nsize(const WeightedGraph& g, int u, int entry) const {
        return g.adj(u).count_and(entries[entry].nodes);
    }
    std::vector<int> entries_containing(int v) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].alive && entries[i].nodes.test(v)) out.push_back(static_cast<int>(i));
        return out;
    }
    int alive_count() const {
        int c = 0;
        for (const auto& e : entries) c += e.alive;
        return c;
    }
};

// Build the weakly normal candidate list from cover + free components.
// On quasi-line inputs the wing/NSize pruning rules apply; `shadow_check`
// re-validates every keep/drop decision against is_weakly_normal.
CandidateList build_candidates(const WeightedGraph& g, const Bitset& s,
                               const NodeClass& cls, const WingMap& wm,
                               const FreeStructure& fs, const SCover& cover,
                               bool quasi_line, bool shadow_check);

// Maximal soft cliques among the candidates, each with its rigid partition
// (the components of the auxiliary root graph on the clique).
struct SoftClique {
    Bitset nodes;
    std::vector<Bitset> partition;
};

std::vector<SoftClique> soft_cliques(const WeightedGraph& g,
                                     const std::vector<Bitset>& candidate_cliques,
                                     bool shadow_check);

// direct definition: connectivity of the rigid subgraph on q
bool is_soft_by_definition(const WeightedGraph& g, const Bitset& q,
                           std::vector<Bitset>* partition_out = nullptr);

} // namespace mwss

#endif
