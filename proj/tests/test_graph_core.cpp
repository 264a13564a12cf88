// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwss/graph.hpp"
#include "test_support.hpp"

using namespace mwss;
using namespace mwss::testing;

TEST_CASE("find_claw on the defining graph") {
    // K1,3: edges 1-2, 1-3, 1-4
    auto g = graph_of(4, {{1, 2}, {1, 3}, {1, 4}});
    auto claw = find_claw(g);
    REQUIRE(claw.has_value());
    CHECK(g.tag(claw->center) == 1);
}

TEST_CASE("find_claw absent on C5 and W5") {
    CHECK(!find_claw(cycle(5)).has_value());
    // exhaustive 4-subset scan agrees on W5
    auto w5 = wheel5();
    CHECK(claw_free_by_enumeration(w5));
    CHECK(!find_claw(w5).has_value());
}

TEST_CASE("find_claw agrees with exhaustive scan") {
    // all graphs on <= 5 nodes
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            WeightedGraph g;
            for (int i = 1; i <= n; ++i) g.add_node(i, 1);
            int e = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++e)
                    if (mask >> e & 1) g.add_edge(i, j);
            CHECK(find_claw(g).has_value() == !claw_free_by_enumeration(g));
        }
    }
    // random graphs up to 9 nodes
    SplitMix64 rng(42);
    for (int it = 0; it < 300; ++it) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto g = random_graph(n, 1, 2, rng);
        auto claw = find_claw(g);
        CHECK(claw.has_value() == !claw_free_by_enumeration(g));
        if (claw) {
            CHECK(g.adjacent(claw->center, claw->leaves[0]));
            CHECK(g.adjacent(claw->center, claw->leaves[1]));
            CHECK(g.adjacent(claw->center, claw->leaves[2]));
            CHECK(!g.adjacent(claw->leaves[0], claw->leaves[1]));
            CHECK(!g.adjacent(claw->leaves[0], claw->leaves[2]));
            CHECK(!g.adjacent(claw->leaves[1], claw->leaves[2]));
        }
    }
}

TEST_CASE("regular_cover simple cases") {
    auto p4 = path(4);
    auto cov = regular_cover(p4, 1); // node tagged 2
    REQUIRE(cov.has_value());
    // neighbors 1 and 3 are non-adjacent, so they land in different cliques
    CHECK(cov->first.size() + cov->second.size() == 2);

    auto w5 = wheel5();
    CHECK(!regular_cover(w5, 0).has_value()); // hub

    auto k3 = complete(3);
    auto c3 = regular_cover(k3, 0);
    REQUIRE(c3.has_value());
    CHECK(c3->first.size() + c3->second.size() == 2);
    // both classes are cliques
    Bitset b1 = Bitset::of(3, c3->first), b2 = Bitset::of(3, c3->second);
    CHECK(k3.is_clique(b1));
    CHECK(k3.is_clique(b2));
}

TEST_CASE("regular_cover returns clique cover of the neighborhood") {
    SplitMix64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng.below(8));
        auto g = random_graph(n, 1, 2, rng);
        for (int v = 0; v < n; ++v) {
            auto cov = regular_cover(g, v);
            if (!cov) continue;
            Bitset b1 = Bitset::of(n, cov->first), b2 = Bitset::of(n, cov->second);
            CHECK(g.is_clique(b1));
            CHECK(g.is_clique(b2));
            Bitset uni = b1 | b2;
            Bitset nh = g.adj(v);
            CHECK(nh.subset_of(uni));
        }
    }
}

TEST_CASE("find_net basic") {
    auto net = net_graph();
    auto w = find_net(net);
    REQUIRE(w.has_value());
    long long tri = 0, pen = 0;
    for (int v : w->triangle) tri += net.tag(v);
    for (int v : w->pendants) pen += net.tag(v);
    CHECK(tri == 1 + 2 + 3);
    CHECK(pen == 4 + 5 + 6);

    CHECK(!find_net(cycle(6)).has_value());
    CHECK(!find_net(complete(4)).has_value());
}

TEST_CASE("remove_twins per definition examples") {
    // adjacent twins: 1,2 adjacent, both adjacent to 3; weights 3 and 5.
    // The path tail 3-4-5 keeps the rest twin-free.
    auto g = graph_of(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}, {3, 5, 1, 1, 2});
    auto [red, ledger] = remove_twins(g);
    CHECK(red.node_count() == 4);
    CHECK(red.has_tag(2)); // weight-5 node kept
    CHECK(!red.has_tag(1));

    // two isolated nodes merge weights
    WeightedGraph iso;
    iso.add_node(1, 3);
    iso.add_node(2, 5);
    auto [red2, ledger2] = remove_twins(iso);
    CHECK(red2.node_count() == 1);
    CHECK(red2.weight(0) == 8);

    // P4 unchanged
    auto p4 = path(4);
    auto [red3, ledger3] = remove_twins(p4);
    CHECK(red3.node_count() == 4);
    CHECK(ledger3.empty());
}

TEST_CASE("remove_twins is idempotent and weight-preserving") {
    SplitMix64 rng(11);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + static_cast<int>(rng.below(11));
        auto g = random_graph(n, 1, 2, rng, 1, 9);
        auto [red, ledger] = remove_twins(g);
        auto [red2, ledger2] = remove_twins(red);
        CHECK(ledger2.empty());
        CHECK(enumerate_mwss(g).first == enumerate_mwss(red).first);
    }
}

TEST_CASE("reinsert_twins recovers an equal-weight stable set") {
    SplitMix64 rng(13);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + static_cast<int>(rng.below(11));
        auto g = random_graph(n, 1, 2, rng, 1, 9);
        auto [red, ledger] = remove_twins(g);
        auto [w, set] = enumerate_mwss(red);
        auto back = reinsert_twins(red, set, ledger);
        Bitset s = g.set_of_tags(back);
        CHECK(g.is_stable(s));
        CHECK(g.set_weight_sum(s) == enumerate_mwss(g).first);
    }
    // merged pair expands to both originals
    WeightedGraph iso;
    iso.add_node(1, 3);
    iso.add_node(2, 5);
    auto [red, ledger] = remove_twins(iso);
    auto back = reinsert_twins(red, {red.tag(0)}, ledger);
    CHECK(back.size() == 2);
    // empty set stays empty
    CHECK(reinsert_twins(red, {}, ledger).empty());
}

TEST_CASE("reinsert_twins rejects unstable input") {
    auto p3 = path(3);
    TwinLedger empty;
    CHECK_THROWS_AS(reinsert_twins(p3, {1, 2}, empty), solver_error);
}

TEST_CASE("alpha_at_most") {
    auto net = net_graph();
    CHECK(alpha_at_most(net, net.full_set(), 3));  // alpha = 3
    CHECK(!alpha_at_most(net, net.full_set(), 2));
    auto c5 = cycle(5);
    CHECK(alpha_at_most(c5, c5.full_set(), 2));
    WeightedGraph four;
    for (int i = 1; i <= 4; ++i) four.add_node(i, 1);
    CHECK(!alpha_at_most(four, four.full_set(), 3));
}

TEST_CASE("has_five_wheel") {
    CHECK(has_five_wheel(wheel5()));
    CHECK(!has_five_wheel(cycle(5)));
    CHECK(!has_five_wheel(complete(6)));
    CHECK(!has_five_wheel(net_graph()));
}

TEST_CASE("induced subgraph and components") {
    auto g = graph_of(5, {{1, 2}, {2, 3}, {4, 5}});
    auto comps = g.components();
    CHECK(comps.size() == 2);
    auto sub = g.induced(comps[0]);
    CHECK(sub.node_count() == 3);
    CHECK(sub.has_tag(1));
    CHECK(sub.has_tag(3));

    auto split = g.components_without({{0, 1}});
    CHECK(split.size() == 3);
}
