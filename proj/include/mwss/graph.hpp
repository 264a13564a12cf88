// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_GRAPH_HPP
#define MWSS_GRAPH_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwss/bitset.hpp"

namespace mwss {

using Weight = long long;
using Tag = long long;

// Thrown when a pipeline invariant or a caller contract is violated.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MWSS_REQUIRE(cond, msg) \
    do { if (!(cond)) throw ::mwss::solver_error(msg); } while (0)

// Undirected simple graph with nonnegative integer node weights.
// Adjacency is kept both as per-node bitsets and sorted neighbor lists;
// node tags are stable external identifiers that survive node additions,
// removals and subgraph extraction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    int add_node(Tag tag, Weight w);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int node_count() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& adj(int v) const { return adj_[v]; }
    const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
    int degree(int v) const { return static_cast<int>(nbr_[v].size()); }

    Weight weight(int v) const { return weight_[v]; }
    void set_weight(int v, Weight w) { weight_[v] = w; }
    Weight max_weight() const;

    Tag tag(int v) const { return tag_[v]; }
    bool has_tag(Tag t) const { return tag_index_.count(t) != 0; }
    int index_of(Tag t) const;

    Bitset full_set() const;
    Bitset closed_nh(int v) const;
    // N(W): nodes outside `s` adjacent to some node of `s`
    Bitset open_nh(const Bitset& s) const;
    bool is_clique(const Bitset& s) const;
    bool is_stable(const Bitset& s) const;
    bool is_maximal_clique(const Bitset& s) const;
    Weight set_weight_sum(const Bitset& s) const;

    // Induced subgraph on `keep`; tags and weights carry over, node order
    // follows ascending old index.
    WeightedGraph induced(const Bitset& keep) const;
    std::vector<Bitset> components() const;
    // components of the graph with the given edges removed
    std::vector<Bitset> components_without(const std::vector<std::pair<int, int>>& skip_edges) const;

    std::vector<Tag> tags_of(const Bitset& s) const;
    Bitset set_of_tags(const std::vector<Tag>& tags) const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::vector<int>> nbr_;
    std::vector<Weight> weight_;
    std::vector<Tag> tag_;
    std::map<Tag, int> tag_index_;
};

// One record per removed twin. Replaying the ledger backwards on a stable
// set of the reduced graph produces a stable set of the original graph of
// equal weight.
struct TwinRecord {
    Tag kept = 0;
    Tag removed = 0;
    bool adjacent = false;
    Weight removed_weight = 0;
};

using TwinLedger = std::vector<TwinRecord>;

struct ClawWitness {
    int center;
    std::array<int, 3> leaves; // mutually non-adjacent neighbors of center
};

struct NetWitness {
    std::array<int, 3> triangle;
    std::array<int, 3> pendants; // pendants[i] meets the triangle exactly at triangle[i]
};

// Detectors scan deterministically (ascending indices) so the first witness
// is reproducible.
std::optional<ClawWitness> find_claw(const WeightedGraph& g);
std::optional<ClawWitness> find_claw_in(const WeightedGraph& g, const Bitset& nodes);
// claws whose center lies in N[touch]; a lift can only create claws there
std::optional<ClawWitness> find_claw_near(const WeightedGraph& g, const Bitset& touch);

std::optional<NetWitness> find_net(const WeightedGraph& g);
std::optional<NetWitness> find_net_in(const WeightedGraph& g, const Bitset& nodes);

// Two cliques covering N(v), or absent iff v is irregular. Computed as a
// 2-coloring of the complement of G[N(v)].
std::optional<std::pair<std::vector<int>, std::vector<int>>>
regular_cover(const WeightedGraph& g, int v);

bool is_regular(const WeightedGraph& g, int v);

// 5-wheel detection: a hub with an induced 5-cycle in its neighborhood.
bool has_five_wheel(const WeightedGraph& g);
bool has_five_wheel_hub_in(const WeightedGraph& g, const Bitset& hubs);

// true iff the subgraph induced on `nodes` has no independent set of size k+1
bool alpha_at_most(const WeightedGraph& g, const Bitset& nodes, int k);

// Twin preprocessing. Adjacent twins keep the max-weight node, non-adjacent
// twins merge their weights onto the kept node. MWSS weight is preserved.
// adjacent_only restricts the pass to adjacent pairs (used mid-pipeline,
// where merging non-adjacent nodes would fuse distinct clique slots).
std::pair<WeightedGraph, TwinLedger> remove_twins(const WeightedGraph& g,
                                                  bool adjacent_only = false);

// Inverse of remove_twins on solutions: expands merged twins, keeps adjacent
// representatives. `reduced` is the graph remove_twins produced.
std::vector<Tag> reinsert_twins(const WeightedGraph& reduced,
                                const std::vector<Tag>& stable_tags,
                                const TwinLedger& ledger);

} // namespace mwss

#endif
