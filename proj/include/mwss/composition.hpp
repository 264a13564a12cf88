// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_COMPOSITION_HPP
#define MWSS_COMPOSITION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mwss/blossom.hpp"
#include "mwss/graph.hpp"
#include "mwss/lifting.hpp"
#include "mwss/pipeline.hpp"

namespace mwss {

// Decomposition of the basic graph into root cliques and strips, followed by
// the gadget construction whose maximum weight matching (plus offset) equals
// the MWSS of the basic graph.

// Boundary-pattern-constrained values of one strip: value[a][b] is the MWSS
// of the strip with boundary node 1 forced in (a=1) or out (a=0), same for
// the optional second boundary. Witness sets are stored per pattern.
struct StripValues {
    int boundaries = 0;                 // 0, 1, 2
    std::array<std::array<Weight, 2>, 2> value{};
    std::array<std::array<std::vector<Tag>, 2>, 2> witness{};
};

struct StripInstance {
    WeightedGraph sub;
    // matched nodes inside the strip, paired with their clique-side partners;
    // partner_resolved follows twin removals to a node present in the basic
    // graph (the root clique host)
    struct Boundary {
        Tag inner = 0;
        Tag partner = 0;
        Weight partner_weight = 0;
        Tag partner_resolved = 0;
    };
    std::vector<Boundary> boundary;
};

struct Decomposition {
    std::vector<Bitset> clique_components;   // root cliques of the basic graph
    std::vector<StripInstance> strips;       // both in-graph and set-aside strips
    std::vector<Bitset> isolated_components; // no boundary, no strip partner
    // per clique component: vertices already consumed by a strip edge or a
    // bridge hub (everything else gets a plain leaf edge)
    std::vector<std::vector<Tag>> clique_tags;
};

// Classify components of basic - matching and fold in the set-aside strips.
// Partner tags are resolved through the twin ledger when the partner node
// was removed as a twin.
Decomposition decompose_basic(const WeightedGraph& basic, const Matching& m,
                              const std::vector<SetAsideStrip>& aside,
                              const LiftLedger& ledger);

// Solve the four boundary patterns of one strip. Uses the alpha<=3
// enumeration when it applies, exact branch and bound otherwise.
StripValues strip_values(const StripInstance& strip);

// The root instance: one node per clique component, per-strip hubs and
// leaves, plus bridge hubs for matching edges joining two clique components.
struct RootInstance {
    MatchingInstance graph;
    Weight offset = 0;
    // per edge: the graph vertices implied by selecting it
    std::vector<std::vector<Tag>> payload;
    // per strip: hub nodes, the gadget's edge ids and the strip values
    struct StripGadget {
        int strip_index = -1;
        int t1 = -1, t2 = -1;
        int e_r1 = -1, e_r2 = -1, e_t1l = -1, e_t2l = -1, e_t1t2 = -1;
        StripValues values;
    };
    std::vector<StripGadget> gadgets;
    std::vector<std::vector<Tag>> isolated_witnesses;
    Weight isolated_total = 0;
};

RootInstance build_root_instance(const WeightedGraph& basic, const Matching& m,
                                 const Decomposition& dec, bool certify);

struct DecodeResult {
    Weight weight = 0;
    std::vector<Tag> set; // stable in the basic graph + strip interiors
    std::vector<std::pair<int, int>> patterns; // realized (a,b) per gadget
};

DecodeResult decode(const RootInstance& ri, const MatchingSolution& sol);

// matching + offset == MWSS of the basic graph; result's tag set is the
// witness (asserted stable and weight-consistent against basic + strips)
DecodeResult solve_basic(const WeightedGraph& basic, const Matching& m,
                         const std::vector<SetAsideStrip>& aside,
                         const LiftLedger& ledger, bool certify);

// DIMACS-like dump of the root instance edge list
std::string render_root_instance(const RootInstance& ri);

} // namespace mwss

#endif
