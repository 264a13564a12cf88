// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_COMPONENT_SOLVER_HPP
#define MWSS_COMPONENT_SOLVER_HPP

#include <vector>

#include "mwss/graph.hpp"

namespace mwss {

// Exact MWSS engine for strip components. Branches on the max-degree node
// (in / out) with a weighted neighborhood bound; a separate code path from
// the test oracle on purpose, so solver and oracle stay independent routes.
struct ComponentSolution {
    Weight weight = 0;
    Bitset set;
};

ComponentSolution solve_component(const WeightedGraph& g, const Bitset& nodes,
                                  const Bitset& forced_in, const Bitset& forced_out);

// Fast path for components whose unmatched part has stability number <= 3:
// enumerate stable sets of size <= 3 plus the forced boundary.
ComponentSolution solve_component_alpha3(const WeightedGraph& g, const Bitset& nodes,
                                         const Bitset& forced_in, const Bitset& forced_out);

} // namespace mwss

#endif
