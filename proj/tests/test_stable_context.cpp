// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwss/oracle.hpp"
#include "mwss/stable_context.hpp"
#include "test_support.hpp"

using namespace mwss;
using namespace mwss::testing;

TEST_CASE("greedy_maximal_stable_set") {
    auto k3 = complete(3, {1, 5, 2});
    auto s = greedy_maximal_stable_set(k3);
    CHECK(s.count() == 1);
    CHECK(k3.weight(s.next(0)) == 5);

    WeightedGraph empty3;
    for (int i = 1; i <= 3; ++i) empty3.add_node(i, 1);
    CHECK(greedy_maximal_stable_set(empty3).count() == 3);

    auto p4 = path(4);
    auto sp = greedy_maximal_stable_set(p4);
    CHECK(p4.tags_of(sp) == std::vector<Tag>{1, 3});
}

TEST_CASE("canonicalize resolves the P3") {
    auto p3 = path(3);
    auto s = canonicalize(p3, p3.set_of_tags({2}));
    CHECK(p3.tags_of(s) == std::vector<Tag>{1, 3});
    CHECK(check_canonical(p3, s));
}

TEST_CASE("canonicalize keeps an already canonical set") {
    auto p4 = path(4);
    auto s = canonicalize(p4, p4.set_of_tags({2, 4}));
    CHECK(p4.tags_of(s) == std::vector<Tag>{2, 4});
}

TEST_CASE("canonicalize performs the dominating swap") {
    // twin-free, claw-free graph where node 2 dominates node 1 under
    // S0 = {1,6,8}: N(1)\{2} = {3} sits inside N(2) = {1,3,4,5}
    auto g = graph_of(8, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {4, 5},
                          {4, 6}, {5, 6}, {4, 7}, {6, 7}, {3, 8}, {7, 8}});
    REQUIRE(!find_claw(g).has_value());
    REQUIRE(remove_twins(g).second.empty());
    auto s = canonicalize(g, g.set_of_tags({1, 6, 8}));
    CHECK(check_canonical(g, s));
    CHECK(s.test(g.index_of(2))); // the dominating node replaced node 1
}

TEST_CASE("canonicalize output is canonical on generated instances") {
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            GenModel model{kind, 16, 1, 30, seed};
            auto g0 = gen_instance(model);
            auto [g, ledger] = remove_twins(g0);
            for (const Bitset& comp : g.components()) {
                auto sub = g.induced(comp);
                auto before = greedy_maximal_stable_set(sub);
                auto s = canonicalize(sub, before);
                CHECK(check_canonical(sub, s));
                CHECK(s.count() >= before.count()); // |S| never decreases
            }
        }
    }
}

TEST_CASE("canonicalize terminates on a twin K2") {
    auto k2 = complete(2);
    auto s = canonicalize(k2, Bitset(2));
    CHECK(s.count() == 1);
}

TEST_CASE("classify on C5") {
    auto c5 = cycle(5);
    Bitset s = c5.set_of_tags({1, 3});
    auto cls = classify(c5, s);
    CHECK(cls.is_bound(c5.index_of(2)));
    CHECK(cls.is_free(c5.index_of(4)));
    CHECK(cls.is_free(c5.index_of(5)));
    CHECK(cls.stable_of(c5.index_of(4)) == c5.index_of(3));
    CHECK(cls.stable_of(c5.index_of(5)) == c5.index_of(1));
}

TEST_CASE("classify: one stable node in a clique makes the rest free") {
    auto k4 = complete(4);
    Bitset s = k4.set_of_tags({1});
    auto cls = classify(k4, s);
    for (int v = 1; v < 4; ++v) CHECK(cls.is_free(v));
}

TEST_CASE("classify rejects 3 stable neighbors") {
    auto claw = graph_of(4, {{1, 2}, {1, 3}, {1, 4}});
    Bitset s = claw.set_of_tags({2, 3, 4});
    CHECK_THROWS_AS(classify(claw, s), solver_error);
}

TEST_CASE("wings on C5") {
    auto c5 = cycle(5);
    Bitset s = c5.set_of_tags({1, 3});
    auto cls = classify(c5, s);
    auto wm = wings(c5, s, cls);
    REQUIRE(wm.wings.size() == 1);
    const Wing* w = wm.wing_between(c5.index_of(1), c5.index_of(3));
    REQUIRE(w != nullptr);
    CHECK(c5.tags_of(w->bound) == std::vector<Tag>{2});
    CHECK(c5.tags_of(w->all()) == std::vector<Tag>{2, 4, 5});
    // 4 is free for 3, adjacent to 5 in F(1); 5 is free for 1
    CHECK(w->free_st.test(c5.index_of(5)) != w->free_st.test(c5.index_of(4)));
    CHECK(wm.wing_count[c5.index_of(1)] == 1);
}

TEST_CASE("wings on P4 and disjoint edges") {
    auto p4 = path(4);
    Bitset s = p4.set_of_tags({2, 4});
    auto cls = classify(p4, s);
    auto wm = wings(p4, s, cls);
    REQUIRE(wm.wings.size() == 1);
    CHECK(p4.tags_of(wm.wings[0].all()) == std::vector<Tag>{3});
    CHECK(wm.wing_of[p4.index_of(1)] == -1); // inner free node

    auto two = graph_of(4, {{1, 2}, {3, 4}});
    Bitset s2 = two.set_of_tags({1, 3});
    auto wm2 = wings(two, s2, classify(two, s2));
    CHECK(wm2.wings.empty());
}

TEST_CASE("free_components on C5") {
    auto c5 = cycle(5);
    Bitset s = c5.set_of_tags({1, 3});
    auto cls = classify(c5, s);
    auto fs = free_components(c5, s, cls);
    REQUIRE(fs.family.size() == 1);
    CHECK(c5.tags_of(fs.gf_components[fs.family[0]]) == std::vector<Tag>{4, 5});
}

TEST_CASE("free_components on P4: none") {
    auto p4 = path(4);
    Bitset s = p4.set_of_tags({2, 4});
    auto fs = free_components(p4, s, classify(p4, s));
    CHECK(fs.family.empty());
}

TEST_CASE("free_components: triangle with pendant stable nodes") {
    // triangle a,b,c = 1,2,3 with pendants 4-1, 5-2, 6-3; S = pendants
    auto g = net_graph();
    Bitset s = g.set_of_tags({4, 5, 6});
    auto cls = classify(g, s);
    auto fs = free_components(g, s, cls);
    REQUIRE(fs.family.size() == 1);
    CHECK(g.tags_of(fs.gf_components[fs.family[0]]) == std::vector<Tag>{1, 2, 3});
    CHECK(fs.classes_met[fs.family[0]] == 3);
}

TEST_CASE("s_cover on P4, W5, clique") {
    auto p4 = path(4);
    Bitset s = p4.set_of_tags({2, 4});
    auto cov = s_cover(p4, s, classify(p4, s));
    REQUIRE(cov.entries.size() == 2);
    const auto& e2 = cov.entries[cov.entry_of[p4.index_of(2)]];
    std::vector<Tag> got{p4.tags_of(e2.c).front(), p4.tags_of(e2.cbar).front()};
    std::sort(got.begin(), got.end());
    CHECK(p4.set_weight_sum(e2.c | e2.cbar) == 3); // {1,2} and {2,3}
    const auto& e4 = cov.entries[cov.entry_of[p4.index_of(4)]];
    CHECK(e4.c == e4.cbar);
    CHECK(p4.tags_of(e4.c) == std::vector<Tag>{3, 4});

    auto w5 = wheel5();
    Bitset sw = w5.set_of_tags({1}); // hub only: maximal, irregular
    auto covw = s_cover(w5, sw, classify(w5, sw));
    CHECK(covw.entries.empty());

    auto k5 = complete(5);
    Bitset sk = k5.set_of_tags({1});
    auto covk = s_cover(k5, sk, classify(k5, sk));
    REQUIRE(covk.entries.size() == 1);
    CHECK(covk.entries[0].c == k5.full_set());
    CHECK(covk.entries[0].cbar == k5.full_set());
}

TEST_CASE("s_cover invariants on generated instances") {
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            GenModel model{kind, 15, 1, 10, seed};
            auto [g, ledger] = remove_twins(gen_instance(model));
            for (const Bitset& comp : g.components()) {
                auto sub = g.induced(comp);
                auto s = canonicalize(sub, greedy_maximal_stable_set(sub));
                auto cls = classify(sub, s);
                auto cov = s_cover(sub, s, cls);
                for (const auto& e : cov.entries) {
                    CHECK(sub.is_maximal_clique(e.c));
                    CHECK(sub.is_maximal_clique(e.cbar));
                    Bitset nh = sub.closed_nh(e.s);
                    CHECK(nh.subset_of(e.c | e.cbar));
                }
            }
        }
    }
}

TEST_CASE("unique wing membership iff no large free component") {
    // u outside S lies in 2+ wings iff it lies in a free component meeting
    // 3+ similarity classes
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenModel model{kind, 20, 1, 10, seed};
            auto [g, ledger] = remove_twins(gen_instance(model));
            for (const Bitset& comp : g.components()) {
                auto sub = g.induced(comp);
                auto s = canonicalize(sub, greedy_maximal_stable_set(sub));
                auto cls = classify(sub, s);
                auto wm = wings(sub, s, cls);
                auto fs = free_components(sub, s, cls);
                for (int v = 0; v < sub.node_count(); ++v) {
                    if (s.test(v)) continue;
                    // count wings containing v
                    int cnt = 0;
                    for (const Wing& w : wm.wings)
                        if (w.all().test(v)) ++cnt;
                    bool in_big = fs.component_of[v] >= 0 &&
                                  fs.classes_met[fs.component_of[v]] >= 3;
                    if (in_big) {
                        CHECK(fs.is_free_component[fs.component_of[v]]);
                        CHECK(cnt >= 2);
                    } else {
                        CHECK(cnt <= 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("four cliques bound: every node in at most 4 cliques of cover+family") {
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenModel model{kind, 20, 1, 10, seed};
            auto [g, ledger] = remove_twins(gen_instance(model));
            for (const Bitset& comp : g.components()) {
                auto sub = g.induced(comp);
                auto s = canonicalize(sub, greedy_maximal_stable_set(sub));
                auto cls = classify(sub, s);
                auto cov = s_cover(sub, s, cls);
                auto fs = free_components(sub, s, cls);
                std::vector<Bitset> cliques;
                for (const auto& e : cov.entries) {
                    cliques.push_back(e.c);
                    if (!(e.cbar == e.c)) cliques.push_back(e.cbar);
                }
                for (int fi : fs.family) cliques.push_back(fs.gf_components[fi]);
                for (int v = 0; v < sub.node_count(); ++v) {
                    int cnt = 0;
                    for (const auto& c : cliques)
                        if (c.test(v)) ++cnt;
                    CHECK(cnt <= 4);
                }
            }
        }
    }
}

TEST_CASE("every family member is a maximal clique meeting 2+ classes") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenModel model{GenKind::MixedClawFree, 18, 1, 10, seed};
        auto [g, ledger] = remove_twins(gen_instance(model));
        for (const Bitset& comp : g.components()) {
            auto sub = g.induced(comp);
            auto s = canonicalize(sub, greedy_maximal_stable_set(sub));
            auto cls = classify(sub, s);
            auto fs = free_components(sub, s, cls);
            for (int fi : fs.family) {
                CHECK(sub.is_maximal_clique(fs.gf_components[fi]));
                CHECK(fs.classes_met[fi] >= 2);
            }
            // any component meeting 3+ classes must be in the family
            for (std::size_t i = 0; i < fs.gf_components.size(); ++i)
                if (fs.classes_met[i] >= 3) CHECK(fs.is_free_component[i]);
        }
    }
}
