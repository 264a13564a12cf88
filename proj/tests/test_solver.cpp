// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwss/oracle.hpp"
#include "mwss/solver.hpp"
#include "test_support.hpp"

using namespace mwss;
using namespace mwss::testing;

TEST_CASE("solve_mwss hand instances") {
    SolveOptions opts;
    opts.certify = true;

    auto c5 = cycle(5);
    auto rep = solve_mwss(c5, opts);
    CHECK(rep.weight == 2);
    CHECK(rep.oracle_checked);

    auto net = net_graph({1, 1, 1, 5, 5, 5});
    CHECK(solve_mwss(net, opts).weight == 15);

    auto p4 = path(4);
    CHECK(solve_mwss(p4, opts).weight == 2);

    auto k1 = complete(1, {7});
    CHECK(solve_mwss(k1, opts).weight == 7);
}

TEST_CASE("claw input is rejected with a witness") {
    auto claw = graph_of(4, {{1, 2}, {1, 3}, {1, 4}});
    SolveOptions opts;
    CHECK_THROWS_AS(solve_mwss(claw, opts), thrown_claw);
}

TEST_CASE("solve_mwss equals the oracle across generated corpora") {
    SolveOptions opts;
    opts.certify = true;
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            GenModel model{kind, 4 + static_cast<int>(seed % 21), 1, 100, seed};
            auto g = gen_instance(model);
            if (g.node_count() > 24) continue;
            auto rep = solve_mwss(g, opts);
            auto oracle = brute_mwss(g);
            CHECK(rep.weight == oracle.weight);
            Bitset s = g.set_of_tags(rep.set);
            CHECK(g.is_stable(s));
            CHECK(g.set_weight_sum(s) == rep.weight);
        }
    }
}

TEST_CASE("disconnected inputs solve per component") {
    // two disjoint C5s plus an isolated node
    WeightedGraph g;
    for (int i = 1; i <= 11; ++i) g.add_node(i, 1);
    for (int c = 0; c < 2; ++c) {
        int b = c * 5;
        for (int i = 0; i < 5; ++i) g.add_edge(b + i, b + (i + 1) % 5);
    }
    SolveOptions opts;
    opts.certify = true;
    auto rep = solve_mwss(g, opts);
    CHECK(rep.weight == 5);
    CHECK(rep.components >= 1); // twin reduction may merge isolated pieces first
}

TEST_CASE("deterministic output") {
    GenModel model{GenKind::MixedClawFree, 20, 1, 50, 1234};
    auto g = gen_instance(model);
    SolveOptions opts;
    auto a = solve_mwss(g, opts);
    auto b = solve_mwss(g, opts);
    CHECK(a.weight == b.weight);
    CHECK(a.set == b.set);
}

TEST_CASE("dot export mentions strips and matching edges") {
    auto p4 = path(4);
    SolveOptions opts;
    auto rep = solve_mwss(p4, opts, true);
    CHECK(rep.dot.find("graph decomposition") != std::string::npos);
    CHECK(rep.dot.find("style=dotted") != std::string::npos);
}
