// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwss/composition.hpp"
#include "mwss/oracle.hpp"
#include "test_support.hpp"

using namespace mwss;
using namespace mwss::testing;

namespace {

// the lifted P4 (P8 shape): 1-2-q1 | qb1-qb2 | q2-3-4, lifting pairs
// (q1,qb1), (q2,qb2), big weights on the lifting nodes
struct P8 {
    WeightedGraph g;
    Matching m;
    Weight wm = 2;

    P8() {
        // tags: 1,2,3,4 original; 101=q1, 102=qb1, 103=q2, 104=qb2
        g.add_node(1, 1);
        g.add_node(2, 1);
        g.add_node(3, 1);
        g.add_node(4, 1);
        int q1 = g.add_node(101, wm), qb1 = g.add_node(102, wm);
        int q2 = g.add_node(103, wm), qb2 = g.add_node(104, wm);
        g.add_edge(0, 1);
        g.add_edge(1, q1);
        g.add_edge(q1, qb1);
        g.add_edge(qb1, qb2);
        g.add_edge(qb2, q2);
        g.add_edge(q2, 2);
        g.add_edge(2, 3);
        m.ensure(8);
        m.add(q1, qb1);
        m.add(q2, qb2);
    }
};

} // namespace

TEST_CASE("decompose the lifted P4") {
    P8 p;
    auto dec = decompose_basic(p.g, p.m, {}, {});
    REQUIRE(dec.clique_components.size() == 1);
    CHECK(p.g.tags_of(dec.clique_components[0]) == std::vector<Tag>{102, 104});
    REQUIRE(dec.strips.size() == 2);
    CHECK(dec.isolated_components.empty());
    for (const auto& s : dec.strips) {
        REQUIRE(s.boundary.size() == 1);
        CHECK((s.boundary[0].inner == 101 || s.boundary[0].inner == 103));
    }
}

TEST_CASE("strip values of the P8 sides") {
    P8 p;
    auto dec = decompose_basic(p.g, p.m, {}, {});
    for (const auto& s : dec.strips) {
        auto sv = strip_values(s);
        REQUIRE(sv.boundaries == 1);
        CHECK(sv.value[1][0] == p.wm + 1); // q + far end
        CHECK(sv.value[0][0] == 1);
    }
}

TEST_CASE("strip values basics") {
    // single node strip of weight 7
    StripInstance si;
    si.sub.add_node(5, 7);
    si.boundary.push_back({5, 99, 3, 99});
    auto sv = strip_values(si);
    CHECK(sv.value[1][0] == 7);
    CHECK(sv.value[0][0] == 0);

    // 2-boundary path u1-a-u2 with weights 2,5,3
    StripInstance si2;
    int u1 = si2.sub.add_node(1, 2);
    int a = si2.sub.add_node(2, 5);
    int u2 = si2.sub.add_node(3, 3);
    si2.sub.add_edge(u1, a);
    si2.sub.add_edge(a, u2);
    si2.boundary.push_back({1, 90, 1, 90});
    si2.boundary.push_back({3, 91, 1, 91});
    auto sv2 = strip_values(si2);
    CHECK(sv2.value[0][0] == 5);
    CHECK(sv2.value[1][0] == 2);
    CHECK(sv2.value[0][1] == 3);
    CHECK(sv2.value[1][1] == 5);
}

TEST_CASE("root instance of the lifted P4 and its matching") {
    P8 p;
    auto dec = decompose_basic(p.g, p.m, {}, {});
    auto ri = build_root_instance(p.g, p.m, dec, true);
    // nodes: 1 root + 2 hubs + 2 leaves; edges: (r,t1,wm),(t1,l1,wm),(r,t2,wm),(t2,l2,wm)
    CHECK(ri.graph.n == 5);
    REQUIRE(ri.graph.edges.size() == 4);
    for (const auto& e : ri.graph.edges) CHECK(e.w == p.wm);
    CHECK(ri.offset == 2);

    auto sol = max_weight_matching(ri.graph);
    CHECK(sol.weight == 2 * p.wm);

    auto res = decode(ri, sol);
    CHECK(res.weight == 2 * p.wm + 2);
    CHECK(res.weight == brute_mwss(p.g).weight);
}

TEST_CASE("solve_basic equals the oracle on the lifted P4") {
    P8 p;
    auto res = solve_basic(p.g, p.m, {}, {}, true);
    CHECK(res.weight == brute_mwss(p.g).weight);
    Bitset s = p.g.set_of_tags(res.set);
    CHECK(p.g.is_stable(s));
    CHECK(p.g.set_weight_sum(s) == res.weight);
}

TEST_CASE("empty matching: single isolated component solved directly") {
    auto c5 = cycle(5, {2, 1, 3, 1, 2});
    Matching m;
    m.ensure(5);
    auto res = solve_basic(c5, m, {}, {}, true);
    CHECK(res.weight == brute_mwss(c5).weight);
}

TEST_CASE("set-aside strips attach to their partner components") {
    // basic graph: the remnant clique {102,104}; two set-aside strips whose
    // partners are those nodes (the P4 case after full extraction)
    WeightedGraph basic;
    int a = basic.add_node(102, 2), b = basic.add_node(104, 2);
    basic.add_edge(a, b);
    Matching m;
    m.ensure(2);

    SetAsideStrip s1;
    s1.sub.add_node(1, 1);
    int q1 = s1.sub.add_node(101, 2);
    s1.sub.add_edge(0, q1);
    s1.boundary.push_back({101, 102, 2});

    SetAsideStrip s2;
    s2.sub.add_node(4, 1);
    int q2 = s2.sub.add_node(103, 2);
    s2.sub.add_edge(0, q2);
    s2.boundary.push_back({103, 104, 2});

    auto res = solve_basic(basic, m, {s1, s2}, {}, true);
    // the underlying graph is the path 1-101-102-104-103-4 with weights
    // 1,2,2,2,2,1: the optimum alternates for 5
    CHECK(res.weight == 5);
    // cross-check against the oracle on the reassembled path
    WeightedGraph whole;
    int n1 = whole.add_node(1, 1), nq1 = whole.add_node(101, 2), nb1 = whole.add_node(102, 2);
    int nb2 = whole.add_node(104, 2), nq2 = whole.add_node(103, 2), n4 = whole.add_node(4, 1);
    whole.add_edge(n1, nq1);
    whole.add_edge(nq1, nb1);
    whole.add_edge(nb1, nb2);
    whole.add_edge(nb2, nq2);
    whole.add_edge(nq2, n4);
    CHECK(res.weight == brute_mwss(whole).weight);
}

TEST_CASE("twin-redirected partner still decodes under its own tag") {
    // partner 104 was removed as an adjacent twin of 102: the strip edge
    // attaches to 102's component but decodes to 104
    WeightedGraph basic;
    basic.add_node(102, 5);
    Matching m;
    m.ensure(1);
    LiftLedger ledger;
    ledger.push_back(LedgerTwin{{102, 104, true, 5}});

    SetAsideStrip s1;
    s1.sub.add_node(1, 1);
    int q1 = s1.sub.add_node(101, 6);
    s1.sub.add_edge(0, q1);
    s1.boundary.push_back({101, 104, 5});

    auto res = solve_basic(basic, m, {s1}, ledger, true);
    // choices: 101+nothing (6+... node 1 adjacent to 101) vs 104 + B1? no:
    // either strip pattern 1 (101 and not 1): 6, plus 102 free to take: 5+6=11
    // wait: 102 vs 104 both can't... pattern 1 means partner not chosen; 102
    // is a separate choice via its leaf edge: total 6 + 5 = 11
    CHECK(res.weight == 11);
    CHECK(std::find(res.set.begin(), res.set.end(), 102) != res.set.end());
}

TEST_CASE("end-to-end basic solves match the oracle on random basic graphs") {
    // build basic graphs directly: a clique bridged to small strips via
    // pendant matched pairs
    SplitMix64 rng(99);
    for (int it = 0; it < 60; ++it) {
        WeightedGraph g;
        Matching m;
        int csize = 2 + static_cast<int>(rng.below(3));
        std::vector<int> clique;
        for (int i = 0; i < csize; ++i) {
            clique.push_back(g.add_node(100 + i, rng.range(1, 9)));
            for (int j = 0; j < i; ++j) g.add_edge(clique[j], clique[i]);
        }
        int strips = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(csize)));
        int tag = 1;
        std::vector<std::pair<int, int>> medges;
        for (int s = 0; s < strips; ++s) {
            // strip: small path, its end matched to clique vertex s
            int len = 1 + static_cast<int>(rng.below(3));
            int prev = -1;
            for (int k = 0; k < len; ++k) {
                int v = g.add_node(tag++, rng.range(1, 9));
                if (prev != -1) g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(prev, clique[s]);
            medges.push_back({prev, clique[s]});
        }
        m.ensure(g.node_count());
        for (auto [u, v] : medges) m.add(u, v);
        if (!check_basic(g, m.edges)) continue;
        auto res = solve_basic(g, m, {}, {}, true);
        CHECK(res.weight == brute_mwss(g).weight);
    }
}
