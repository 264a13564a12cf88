// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/oracle.hpp"

#include <algorithm>

#include "mwss/rng.hpp"

namespace mwss {

namespace {

// Greedy clique cover of `rest`: each node joins the first clique it is
// universal to. The bound is the sum of per-clique weight maxima.
Weight clique_cover_bound(const WeightedGraph& g, const Bitset& rest) {
    std::vector<Bitset> cliques;
    std::vector<Weight> best;
    for (int v = rest.next(0); v != -1; v = rest.next(v + 1)) {
        bool placed = false;
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            if (cliques[i].subset_of(g.adj(v))) {
                cliques[i].set(v);
                best[i] = std::max(best[i], g.weight(v));
                placed = true;
                break;
            }
        }
        if (!placed) {
            Bitset c(g.node_count());
            c.set(v);
            cliques.push_back(c);
            best.push_back(g.weight(v));
        }
    }
    Weight b = 0;
    for (Weight w : best) b += w;
    return b;
}

struct MwssSearch {
    const WeightedGraph& g;
    Weight best_w = -1;
    Bitset best_set;

    // Branch on the smallest remaining index, include first. With positive
    // weights the first optimum found this way is the lexicographically
    // smallest tag set, so equal-bound subtrees can be pruned.
    void run(const Bitset& rest, Bitset chosen, Weight w) {
        int v = rest.next(0);
        if (v == -1) {
            if (w > best_w) { best_w = w; best_set = chosen; }
            return;
        }
        if (best_w >= 0 && w + clique_cover_bound(g, rest) <= best_w) return;
        Bitset in = rest - g.adj(v);
        in.reset(v);
        chosen.set(v);
        run(in, chosen, w + g.weight(v));
        chosen.reset(v);
        Bitset out = rest;
        out.reset(v);
        run(out, chosen, w);
    }
};

} // namespace

MwssResult brute_mwss(const WeightedGraph& g,
                      const std::vector<Tag>& forced_in,
                      const std::vector<Tag>& forced_out,
                      int guard) {
    Bitset fin = g.set_of_tags(forced_in);
    Bitset fout = g.set_of_tags(forced_out);
    MWSS_REQUIRE(!fin.intersects(fout), "brute_mwss: forced_in and forced_out overlap");
    MWSS_REQUIRE(g.is_stable(fin), "brute_mwss: forced_in is not stable");

    // surgery: drop forced_out, drop N[forced_in], add the forced weight back
    Bitset rest = g.full_set();
    rest -= fout;
    Weight base = 0;
    fin.for_each([&](int v) {
        base += g.weight(v);
        rest -= g.adj(v);
        rest.reset(v);
    });
    MWSS_REQUIRE(rest.count() <= guard, "brute_mwss: instance exceeds the size guard");

    MwssSearch search{g, -1, Bitset(g.node_count())};
    search.run(rest, Bitset(g.node_count()), 0);

    MwssResult res;
    res.weight = base + search.best_w;
    Bitset full = search.best_set | fin;
    res.set = g.tags_of(full);
    return res;
}

BruteMatchingResult brute_matching(const std::vector<WeightedEdge>& edges) {
    MWSS_REQUIRE(edges.size() <= 16, "brute_matching: more than 16 edges");
    int m = static_cast<int>(edges.size());
    Weight best = 0;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Weight w = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            w += edges[i].w;
            for (int j = i + 1; j < m; ++j) {
                if (!(mask >> j & 1)) continue;
                if (edges[i].u == edges[j].u || edges[i].u == edges[j].v ||
                    edges[i].v == edges[j].u || edges[i].v == edges[j].v) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && w > best) { best = w; best_mask = mask; }
    }
    BruteMatchingResult res;
    res.weight = best;
    for (int i = 0; i < m; ++i)
        if (best_mask >> i & 1) res.edge_indices.push_back(i);
    return res;
}

bool check_canonical(const WeightedGraph& g, const Bitset& s) {
    MWSS_REQUIRE(g.is_stable(s), "check_canonical: set is not stable");
    for (int v = 0; v < g.node_count(); ++v) {
        if (!s.test(v) && !g.adj(v).intersects(s))
            throw solver_error("check_canonical: set is not maximal");
    }
    // augmenting P3 (u, t, v): two non-adjacent free nodes with the same
    // stable neighbor t
    int n = g.node_count();
    std::vector<int> stable_deg(n, 0);
    std::vector<int> stable_nbr(n, -1);
    for (int v = 0; v < n; ++v) {
        if (s.test(v)) continue;
        Bitset sn = g.adj(v) & s;
        stable_deg[v] = sn.count();
        if (stable_deg[v] == 1) stable_nbr[v] = sn.next(0);
    }
    for (int t = s.next(0); t != -1; t = s.next(t + 1)) {
        std::vector<int> free_nbrs;
        for (int u : g.neighbors(t))
            if (stable_deg[u] == 1) free_nbrs.push_back(u);
        for (std::size_t i = 0; i < free_nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < free_nbrs.size(); ++j)
                if (!g.adjacent(free_nbrs[i], free_nbrs[j])) return false;
    }
    // dominating free node: N(x) proper superset of N(S(x)) \ {x}
    for (int x = 0; x < n; ++x) {
        if (s.test(x) || stable_deg[x] != 1) continue;
        int t = stable_nbr[x];
        Bitset nt = g.adj(t);
        nt.reset(x);
        const Bitset& nx = g.adj(x);
        if (nt.subset_of(nx) && nx.count() > nt.count()) return false;
    }
    return true;
}

bool check_liftable(const WeightedGraph& g, const Bitset& q,
                    const std::vector<Bitset>& partition) {
    int n = g.node_count();
    Bitset uni(n);
    for (const auto& p : partition) {
        MWSS_REQUIRE(p.any(), "check_liftable: empty part");
        MWSS_REQUIRE(!uni.intersects(p), "check_liftable: overlapping parts");
        uni |= p;
    }
    MWSS_REQUIRE(uni == q, "check_liftable: partition does not cover the clique");

    Bitset nq = g.open_nh(q);
    // (i) weak normality: non-adjacent neighbors of q never share a node of q
    std::vector<int> nqv = nq.to_vector();
    for (std::size_t i = 0; i < nqv.size(); ++i)
        for (std::size_t j = i + 1; j < nqv.size(); ++j) {
            int u = nqv[i], v = nqv[j];
            if (g.adjacent(u, v)) continue;
            if ((g.adj(u) & g.adj(v)).intersects(q)) return false;
        }
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < partition.size(); ++i)
        partition[i].for_each([&](int v) { part_of[v] = static_cast<int>(i); });
    // (ii) no cross-part pair is the base of a paw (apex z universal to the
    // pair, tail h null to it, both off q)
    std::vector<int> qv = q.to_vector();
    for (std::size_t i = 0; i < qv.size(); ++i)
        for (std::size_t j = i + 1; j < qv.size(); ++j) {
            int x = qv[i], y = qv[j];
            if (part_of[x] == part_of[y]) continue;
            Bitset apexes = (g.adj(x) & g.adj(y)) - q;
            bool bad = false;
            apexes.for_each([&](int z) {
                if (bad) return;
                Bitset tails = g.adj(z) - q;
                tails -= g.adj(x);
                tails -= g.adj(y);
                tails.reset(x);
                tails.reset(y);
                if (tails.any()) bad = true;
            });
            if (bad) return false;
        }
    // (iii) no node of N(q) adjacent to three different parts
    for (int h = nq.next(0); h != -1; h = nq.next(h + 1)) {
        Bitset hq = g.adj(h) & q;
        int parts_seen = 0;
        std::vector<char> seen(partition.size(), 0);
        bool bad = false;
        hq.for_each([&](int v) {
            if (!seen[part_of[v]]) {
                seen[part_of[v]] = 1;
                if (++parts_seen >= 3) bad = true;
            }
        });
        if (bad) return false;
    }
    return true;
}

bool is_m_clique(const WeightedGraph& g, const Bitset& c,
                 const std::vector<std::pair<int, int>>& m) {
    if (!g.is_clique(c)) return false;
    bool has_boundary = false;
    bool ok = true;
    c.for_each([&](int v) {
        if (!ok) return;
        Bitset outside = g.adj(v) - c;
        outside.for_each([&](int u) {
            if (!ok) return;
            has_boundary = true;
            bool in_m = false;
            for (auto [a, b] : m)
                if ((a == v && b == u) || (a == u && b == v)) { in_m = true; break; }
            if (!in_m) ok = false;
        });
    });
    return ok && has_boundary;
}

bool check_basic(const WeightedGraph& g, const std::vector<std::pair<int, int>>& m) {
    Bitset vm(g.node_count());
    for (auto [u, v] : m) { vm.set(u); vm.set(v); }
    for (const Bitset& c : g.components_without(m)) {
        if (is_m_clique(g, c, m)) continue;
        if ((c & vm).count() > 2) return false;
        bool cn_free = !find_claw_in(g, c) && !find_net_in(g, c);
        if (!cn_free && !alpha_at_most(g, c - vm, 3)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// generators

WeightedGraph line_graph_of(int nv, const std::vector<std::pair<int, int>>& root_edges,
                            const std::vector<Weight>& weights) {
    WeightedGraph g;
    int m = static_cast<int>(root_edges.size());
    for (int i = 0; i < m; ++i)
        g.add_node(i + 1, weights.empty() ? 1 : weights[i]);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = root_edges[i];
            auto [c, d] = root_edges[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    }
    (void)nv;
    return g;
}

WeightedGraph circular_interval_graph(int n, const std::vector<std::pair<int, int>>& arcs,
                                      const std::vector<Weight>& weights) {
    WeightedGraph g;
    for (int i = 0; i < n; ++i)
        g.add_node(i + 1, weights.empty() ? 1 : weights[i]);
    for (auto [start, len] : arcs) {
        MWSS_REQUIRE(len < n, "arc must not wrap the whole circle");
        for (int a = 0; a <= len; ++a)
            for (int b = a + 1; b <= len; ++b) {
                int u = (start + a) % n, v = (start + b) % n;
                if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
            }
    }
    return g;
}

namespace {

LineGraphRoot gen_line_root(const GenModel& model, SplitMix64& rng) {
    LineGraphRoot root;
    int m = std::max(1, model.n);
    root.nv = std::max(2, (m + 2) / 3);
    for (int i = 0; i < m; ++i) {
        int u = static_cast<int>(rng.below(root.nv));
        int v = static_cast<int>(rng.below(root.nv - 1));
        if (v >= u) ++v;
        root.edges.push_back({u, v});
    }
    for (int i = 0; i < m; ++i) root.weights.push_back(rng.range(model.wmin, model.wmax));
    return root;
}

WeightedGraph gen_line(const GenModel& model, SplitMix64& rng) {
    LineGraphRoot root = gen_line_root(model, rng);
    return line_graph_of(root.nv, root.edges, root.weights);
}

WeightedGraph gen_circular(const GenModel& model, SplitMix64& rng) {
    int n = std::max(2, model.n);
    int arcs = n;
    int max_len = std::max(1, std::min(n - 1, n / 3 + 2));
    std::vector<std::pair<int, int>> arc_list;
    for (int i = 0; i < arcs; ++i) {
        int start = static_cast<int>(rng.below(n));
        int len = 1 + static_cast<int>(rng.below(max_len));
        arc_list.push_back({start, len});
    }
    std::vector<Weight> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.range(model.wmin, model.wmax));
    return circular_interval_graph(n, arc_list, w);
}

WeightedGraph gen_mixed(const GenModel& model, SplitMix64& rng) {
    // disjoint W5 / net / clique blocks glued on random cliques, then claw
    // repair by deleting the smallest leaf of the first claw found
    WeightedGraph g;
    int target = std::max(4, model.n);
    int next_tag = 1;
    auto add_block = [&](int kind) {
        std::vector<int> ids;
        int base = g.node_count();
        int cnt = kind == 2 ? 3 + static_cast<int>(rng.below(3)) : 6;
        for (int i = 0; i < cnt; ++i)
            ids.push_back(g.add_node(next_tag++, rng.range(model.wmin, model.wmax)));
        if (kind == 0) { // 5-wheel: hub base, rim base+1..base+5
            for (int i = 1; i <= 5; ++i) g.add_edge(base, base + i);
            for (int i = 1; i <= 4; ++i) g.add_edge(base + i, base + i + 1);
            g.add_edge(base + 5, base + 1);
        } else if (kind == 1) { // net
            g.add_edge(base, base + 1); g.add_edge(base, base + 2); g.add_edge(base + 1, base + 2);
            g.add_edge(base, base + 3); g.add_edge(base + 1, base + 4); g.add_edge(base + 2, base + 5);
        } else { // clique
            for (int i = 0; i < cnt; ++i)
                for (int j = i + 1; j < cnt; ++j) g.add_edge(base + i, base + j);
        }
        return ids;
    };
    add_block(static_cast<int>(rng.below(3)));
    while (g.node_count() < target) {
        int old_count = g.node_count();
        auto ids = add_block(static_cast<int>(rng.below(3)));
        // glue the new block to a small clique around a random old node
        int anchor = static_cast<int>(rng.below(old_count));
        int nu = ids[rng.below(ids.size())];
        std::vector<int> cl{anchor};
        for (int u : g.neighbors(anchor)) {
            if (u >= old_count) continue;
            bool uni = true;
            for (int c : cl)
                if (c != u && !g.adjacent(c, u)) { uni = false; break; }
            if (uni && static_cast<int>(cl.size()) < 3) cl.push_back(u);
        }
        for (int c : cl) g.add_edge(nu, c);
    }
    // claw repair
    for (;;) {
        auto claw = find_claw(g);
        if (!claw) break;
        int leaf = claw->leaves[0];
        for (int cand : claw->leaves)
            if (g.tag(cand) < g.tag(leaf)) leaf = cand;
        Bitset keep = g.full_set();
        keep.reset(leaf);
        g = g.induced(keep);
    }
    return g;
}

} // namespace

WeightedGraph gen_instance(const GenModel& model) {
    SplitMix64 rng(model.seed);
    switch (model.kind) {
        case GenKind::LineGraph: return gen_line(model, rng);
        case GenKind::CircularInterval: return gen_circular(model, rng);
        case GenKind::MixedClawFree: return gen_mixed(model, rng);
    }
    throw solver_error("unknown generator kind");
}

LineGraphRoot line_graph_root(const GenModel& model) {
    MWSS_REQUIRE(model.kind == GenKind::LineGraph, "root is defined for the line model only");
    SplitMix64 rng(model.seed);
    return gen_line_root(model, rng);
}

} // namespace mwss
