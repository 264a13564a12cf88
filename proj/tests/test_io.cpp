// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwss/io.hpp"
#include "mwss/oracle.hpp"
#include "test_support.hpp"

using namespace mwss;
using namespace mwss::testing;

TEST_CASE("parse minimal instance") {
    auto g = parse_instance_string("p mwss 2 1\ne 1 2\n");
    CHECK(g.node_count() == 2);
    CHECK(g.weight(0) == 1);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance_string("p mwss 2 1\nv 1 -3\ne 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_instance_string("p mwss 2 2\ne 1 2\ne 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_instance_string("p mwss 2 1\ne 1 3\n"), parse_error);
    CHECK_THROWS_AS(parse_instance_string("p mwss 2 1\ne 2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_instance_string("e 1 2\n"), parse_error);
    try {
        parse_instance_string("p mwss 2 1\nv 1 -3\ne 1 2\n");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("round trip is byte-identical on generated instances") {
    for (auto kind : {GenKind::LineGraph, GenKind::CircularInterval, GenKind::MixedClawFree}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenModel model{kind, 14, 1, 50, seed};
            auto g = renumbered(gen_instance(model));
            std::string text = render_instance(g);
            auto g2 = parse_instance_string(text);
            CHECK(render_instance(g2) == text);
            REQUIRE(g2.node_count() == g.node_count());
            for (int v = 0; v < g.node_count(); ++v) {
                CHECK(g2.weight(v) == g.weight(v));
                CHECK(g2.neighbors(v) == g.neighbors(v));
            }
        }
    }
}

TEST_CASE("weight guard") {
    WeightedGraph g;
    g.add_node(1, 1LL << 61);
    CHECK_THROWS_AS(check_weight_guard(g), solver_error);
    auto ok = path(5);
    CHECK_NOTHROW(check_weight_guard(ok));
}
