// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/component_solver.hpp"

#include <algorithm>

namespace mwss {

namespace {

struct Search {
    const WeightedGraph& g;
    Weight best_w = -1;
    Bitset best_set;

    // Clique-cover bound, heaviest-first: peel a maximal clique seeded at the
    // heaviest remaining node; a stable set takes at most one node per
    // clique, so the sum of seed weights bounds from above.
    Weight bound(Bitset rest) const {
        Weight b = 0;
        while (rest.any()) {
            int pick = -1;
            Weight pw = -1;
            rest.for_each([&](int v) {
                if (g.weight(v) > pw) { pw = g.weight(v); pick = v; }
            });
            b += pw;
            Bitset clique(g.node_count());
            clique.set(pick);
            Bitset cand = g.adj(pick) & rest;
            while (cand.any()) {
                int u = -1;
                Weight uw = -1;
                cand.for_each([&](int x) {
                    if (g.weight(x) > uw) { uw = g.weight(x); u = x; }
                });
                clique.set(u);
                cand &= g.adj(u);
            }
            rest -= clique;
        }
        return b;
    }

    void run(Bitset rest, Bitset chosen, Weight w) {
        if (rest.none()) {
            if (w > best_w || (w == best_w && lex_smaller(chosen))) {
                best_w = w;
                best_set = chosen;
            }
            return;
        }
        if (best_w >= 0 && w + bound(rest) < best_w) return;
        // max-degree-in-rest branching node
        int pick = -1, pd = -1;
        rest.for_each([&](int v) {
            int d = g.adj(v).count_and(rest);
            if (d > pd) { pd = d; pick = v; }
        });
        if (pd == 0) {
            // remaining nodes are pairwise non-adjacent: take them all
            Bitset all = chosen | rest;
            Weight tw = w + g.set_weight_sum(rest);
            if (tw > best_w || (tw == best_w && lex_smaller(all))) {
                best_w = tw;
                best_set = all;
            }
            return;
        }
        // include pick
        Bitset in = rest - g.adj(pick);
        in.reset(pick);
        Bitset chosen_in = chosen;
        chosen_in.set(pick);
        run(in, chosen_in, w + g.weight(pick));
        // exclude pick
        rest.reset(pick);
        run(rest, chosen, w);
    }

    bool lex_smaller(const Bitset& cand) const {
        std::vector<Tag> a = g.tags_of(cand), b = g.tags_of(best_set);
        return a < b;
    }
};

} // namespace

ComponentSolution solve_component(const WeightedGraph& g, const Bitset& nodes,
                                  const Bitset& forced_in, const Bitset& forced_out) {
    MWSS_REQUIRE(forced_in.subset_of(nodes), "solve_component: forced_in outside component");
    MWSS_REQUIRE(g.is_stable(forced_in), "solve_component: forced_in not stable");
    Bitset rest = nodes;
    rest -= forced_out;
    Weight base = 0;
    forced_in.for_each([&](int v) {
        base += g.weight(v);
        rest -= g.adj(v);
        rest.reset(v);
    });
    Search search{g, -1, Bitset(g.node_count())};
    search.run(rest, Bitset(g.node_count()), 0);
    ComponentSolution out;
    out.weight = base + search.best_w;
    out.set = search.best_set | forced_in;
    return out;
}

ComponentSolution solve_component_alpha3(const WeightedGraph& g, const Bitset& nodes,
                                         const Bitset& forced_in, const Bitset& forced_out) {
    Bitset rest = nodes;
    rest -= forced_out;
    Weight base = 0;
    forced_in.for_each([&](int v) {
        base += g.weight(v);
        rest -= g.adj(v);
        rest.reset(v);
    });
    std::vector<int> cand = rest.to_vector();
    Weight best = 0;
    Bitset best_set(g.node_count());
    // all stable subsets of size <= 3
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int a = cand[i];
        Weight wa = g.weight(a);
        if (wa > best) {
            best = wa;
            best_set = Bitset(g.node_count());
            best_set.set(a);
        }
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            int b = cand[j];
            if (g.adjacent(a, b)) continue;
            Weight wab = wa + g.weight(b);
            if (wab > best) {
                best = wab;
                best_set = Bitset(g.node_count());
                best_set.set(a);
                best_set.set(b);
            }
            Bitset cs = rest - g.adj(a);
            cs -= g.adj(b);
            for (int c = cs.next(b + 1); c != -1; c = cs.next(c + 1)) {
                Weight wabc = wab + g.weight(c);
                if (wabc > best) {
                    best = wabc;
                    best_set = Bitset(g.node_count());
                    best_set.set(a);
                    best_set.set(b);
                    best_set.set(c);
                }
            }
        }
    }
    ComponentSolution out;
    out.weight = base + best;
    out.set = best_set | forced_in;
    return out;
}

} // namespace mwss
