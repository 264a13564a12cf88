// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_LIFTING_HPP
#define MWSS_LIFTING_HPP

#include <string>
#include <variant>
#include <vector>

#include "mwss/clique_analysis.hpp"
#include "mwss/graph.hpp"
#include "mwss/stable_context.hpp"

namespace mwss {

enum class LiftPhase { Soft, FreeComponent, SLifting };

// One lifting: clique q split along a partition, cross edges removed, a new
// clique {qbar_i} plus pendant stable nodes {q_i} attached by the lifting
// edges q_i qbar_i. Everything is recorded in tags so the chain survives
// subgraph extraction.
struct LiftRecord {
    LiftPhase phase = LiftPhase::Soft;
    std::vector<Tag> clique;                 // lifted clique
    std::vector<std::vector<Tag>> parts;     // lifting partition
    std::vector<Tag> q;                      // stable-side nodes, parts order
    std::vector<Tag> qbar;                   // clique-side nodes, parts order
    std::vector<std::pair<Tag, Tag>> removed_edges;
    Weight w_m = 0;
};

struct LedgerTwin {
    TwinRecord twin;
};

using LedgerEntry = std::variant<LiftRecord, LedgerTwin>;
using LiftLedger = std::vector<LedgerEntry>;

// S-matching: lifting edges only, each saturated by S.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> mate; // -1 when unmatched

    void ensure(int n) { mate.resize(n, -1); }
    void add(int u, int v) {
        edges.push_back({u, v});
        mate[u] = v;
        mate[v] = u;
    }
    bool covers(int v) const { return mate[v] != -1; }
    Bitset covered_set(int n) const {
        Bitset b(n);
        for (auto [u, v] : edges) { b.set(u); b.set(v); }
        return b;
    }
};

// Tag allocator for lifting nodes; monotone, never reused.
class TagAllocator {
public:
    explicit TagAllocator(Tag start) : next_(start) {}
    Tag next() { return next_++; }

private:
    Tag next_;
};

struct LiftResult {
    std::vector<int> q_idx;
    std::vector<int> qbar_idx;
    int record_index = -1;
};

// Apply one lifting to the working graph, extending weights (w_m = current
// max + 1 on all new nodes), the stable set and the matching. With `verify`
// the (q, partition) liftability contract is checked up front.
LiftResult lift(WeightedGraph& g, const Bitset& q, const std::vector<Bitset>& partition,
                StableContext& ctx, Matching& m, LiftPhase phase,
                TagAllocator& tags, LiftLedger& ledger, bool verify);

// Map a stable set of the final graph back to the original instance:
// lifting records are stripped in reverse (each must own one node per
// lifting pair; surviving clique members must sit in a single part), twin
// records re-expand merged nodes.
std::vector<Tag> unwind(const std::vector<Tag>& final_set, const LiftLedger& ledger);

// Cover update after an S-lifting of cover clique c_s: the clique is
// replaced by the 2p+1 new cliques (lifting clique, parts + their stable
// node, lifting edges) assigned to the new stable nodes.
void extend_cover(SCover& cover, const WeightedGraph& g, const StableContext& ctx,
                  int lifted_stable, const LiftResult& lr,
                  const std::vector<Bitset>& partition);

// Candidate-list update after an S-lifting: the lifted clique goes, parts
// with no matched node come in (except the part of s when s has no outside
// neighbors, which became an M-clique).
void update_candidates(CandidateList& list, const WeightedGraph& g,
                       const StableContext& ctx, const Matching& pre_lift_m,
                       int lifted_entry, int lifted_stable,
                       const std::vector<Bitset>& partition, const LiftResult& lr,
                       bool had_outside_neighbors);

// Text dump of the undo chain, one line per record.
std::string render_ledger(const LiftLedger& ledger);

} // namespace mwss

#endif
