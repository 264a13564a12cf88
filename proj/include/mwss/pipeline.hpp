// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_PIPELINE_HPP
#define MWSS_PIPELINE_HPP

#include <optional>
#include <vector>

#include "mwss/clique_analysis.hpp"
#include "mwss/lifting.hpp"
#include "mwss/stable_context.hpp"

namespace mwss {

// A component detached at quasi-line extraction, kept aside until the
// composition stage. Boundary entries name the matched node inside the strip
// and its clique-side partner that stayed in the working graph.
struct SetAsideStrip {
    WeightedGraph sub;
    struct Boundary {
        Tag inner = 0;
        Tag partner = 0;
        Weight partner_weight = 0;
    };
    std::vector<Boundary> boundary; // 0, 1 or 2 entries
};

struct PhaseStats {
    int lifts_soft = 0;
    int lifts_free = 0;
    int lifts_s = 0;
    int strips_extracted = 0;
    int s_iterations = 0;
    int original_nodes = 0;
    int final_nodes = 0; // working graph + strip nodes
};

struct PipelineOptions {
    bool certify = false;          // per-lift and shadow assertions
    bool structure_checks = true;  // phase-boundary certificates (cheap)
    int heavy_check_limit = 400;   // node bound for clique-enumeration checks
};

// One connected, twin-free, claw-free component driven down to a basic
// quasi-line graph plus set-aside strips.
struct PipelineState {
    WeightedGraph g;
    StableContext ctx;
    Matching m;
    LiftLedger ledger;
    std::vector<SetAsideStrip> strips;
    PhaseStats stats;
    PipelineOptions opts;
    bool input_five_wheel_free = false;

    Bitset vm() const { return m.covered_set(g.node_count()); }
    std::vector<std::pair<int, int>> matching_edges() const { return m.edges; }
};

// S-partition of a cover clique: one part per non-polar wing, the center
// part around the stable node, and (when the polar wing splits) its bound
// remainder.
struct SPartitionSpec {
    int stable_node = -1;
    int polar_node = -1;            // -1 when no polar wing exists
    bool split_polar = false;       // free neighbors outside force the split
    std::vector<Bitset> parts;
    bool touches_big_free_component = false;
};

// extremes of the wings containing u: both stable neighbors for bound nodes,
// S(u) plus the stable neighbors of dissimilar free neighbors for free nodes
std::vector<int> wing_partners(const WeightedGraph& g, const NodeClass& cls, int u);

std::optional<int> polar_wing(const WeightedGraph& g, const NodeClass& cls,
                              const Bitset& clique, int s, bool certify);

SPartitionSpec s_partition(const WeightedGraph& g, const NodeClass& cls,
                           const Bitset& clique, int s, bool certify);

bool is_s_liftable(const WeightedGraph& g, const Matching& m, const Bitset& clique,
                   const SPartitionSpec& spec);

// phase drivers
void soft_lift_all(PipelineState& st, TagAllocator& tags);
void extract_quasiline(PipelineState& st);
void free_lift_all(PipelineState& st, TagAllocator& tags);
void s_lift_loop(PipelineState& st, TagAllocator& tags);

// whole per-component pipeline; input must be connected, twin-free, claw-free
PipelineState run_pipeline(WeightedGraph component, const PipelineOptions& opts,
                           TagAllocator& tags);

} // namespace mwss

#endif
