// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_SOLVER_HPP
#define MWSS_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwss/graph.hpp"
#include "mwss/pipeline.hpp"

namespace mwss {

struct SolveOptions {
    bool certify = false;           // heavy per-lift and shadow checks
    bool structure_checks = true;   // phase-boundary certificates
    int oracle_guard = 32;          // certify-mode oracle comparison limit
};

struct SolveReport {
    Weight weight = 0;
    std::vector<Tag> set;           // stable set in original ids
    PhaseStats stats;               // aggregated over components
    int components = 0;
    int strips = 0;
    bool oracle_checked = false;    // certify mode, instance within guard
    std::string dot;                // decomposition sketch when requested
};

struct thrown_claw : solver_error {
    ClawWitness witness;
    explicit thrown_claw(const ClawWitness& w)
        : solver_error("input graph contains a claw"), witness(w) {}
};

// End-to-end exact MWSS for a claw-free instance. Throws thrown_claw when
// the input is not claw-free, solver_error on internal invariant failures.
SolveReport solve_mwss(const WeightedGraph& input, const SolveOptions& opts,
                       bool want_dot = false);

} // namespace mwss

#endif
