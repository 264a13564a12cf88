// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mwss/oracle.hpp"

namespace mwss {

namespace {

std::vector<Bitset> dedup_cover_family(const WeightedGraph& g, const SCover& cover,
                                       const FreeStructure& fs) {
    std::vector<Bitset> out;
    for (const auto& e : cover.entries) {
        out.push_back(e.c);
        if (!(e.cbar == e.c)) out.push_back(e.cbar);
    }
    for (int fi : fs.family) out.push_back(fs.gf_components[fi]);
    (void)g;
    return out;
}

void assert_canonical_after_lift(PipelineState& st, const Bitset& touch) {
    if (!st.opts.certify) return;
    MWSS_REQUIRE(check_canonical(st.g, st.ctx.s),
                 "lift postcondition: extended stable set is not canonical");
    if (st.input_five_wheel_free) {
        Bitset hubs = touch;
        hubs.resize(st.g.node_count());
        hubs |= st.g.open_nh(touch);
        MWSS_REQUIRE(!has_five_wheel_hub_in(st.g, hubs),
                     "lift postcondition: a 5-wheel appeared in a 5-wheel-free graph");
    }
}

// Lemma-style certificate after the soft phase: (i) maximal cliques off the
// matched nodes are rigid, (ii) matched nodes are adjacent only when matched
// together or inside one lifting clique.
void check_after_soft(PipelineState& st) {
    int n = st.g.node_count();
    Bitset vm = st.vm();
    // (ii): matched nodes adjacent iff matched together or in one lifting clique
    std::map<Tag, int> qbar_record;
    int rec_id = 0;
    for (const auto& entry : st.ledger) {
        if (std::holds_alternative<LiftRecord>(entry))
            for (Tag t : std::get<LiftRecord>(entry).qbar) qbar_record[t] = rec_id;
        ++rec_id;
    }
    std::vector<int> vmv = vm.to_vector();
    for (std::size_t i = 0; i < vmv.size(); ++i)
        for (std::size_t j = i + 1; j < vmv.size(); ++j) {
            int u = vmv[i], v = vmv[j];
            bool adj = st.g.adjacent(u, v);
            bool matched = st.m.mate[u] == v;
            auto iu = qbar_record.find(st.g.tag(u));
            auto iv = qbar_record.find(st.g.tag(v));
            bool together = iu != qbar_record.end() && iv != qbar_record.end() &&
                            iu->second == iv->second;
            MWSS_REQUIRE(adj == (matched || together),
                         "matched-node adjacency certificate failed after the soft phase");
        }
    // (i): every maximal clique off the matched nodes is rigid. Rigid edges
    // are witnessed in the full graph; connectivity is within the clique.
    if (st.opts.certify && n <= st.opts.heavy_check_limit) {
        Bitset rest = st.g.full_set();
        rest -= vm;
        WeightedGraph sub = st.g.induced(rest);
        auto rigid_connected = [&](const Bitset& sub_clique) {
            std::vector<int> full;
            sub_clique.for_each([&](int v) { full.push_back(st.g.index_of(sub.tag(v))); });
            if (full.size() <= 1) return true;
            std::vector<int> parent(full.size());
            for (std::size_t i = 0; i < full.size(); ++i) parent[i] = static_cast<int>(i);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (std::size_t i = 0; i < full.size(); ++i)
                for (std::size_t j = i + 1; j < full.size(); ++j)
                    if (is_rigid_edge(st.g, full[i], full[j])) {
                        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                        if (a != b) parent[std::max(a, b)] = std::min(a, b);
                    }
            for (std::size_t i = 1; i < full.size(); ++i)
                if (find(static_cast<int>(i)) != find(0)) return false;
            return true;
        };
        struct BK {
            const WeightedGraph& gg;
            const std::function<bool(const Bitset&)>& rigid_ok;
            void run(Bitset r, Bitset p, Bitset x) {
                if (p.none() && x.none()) {
                    MWSS_REQUIRE(rigid_ok(r),
                                 "soft maximal clique left off the matching after the "
                                 "soft phase");
                    return;
                }
                Bitset px = p | x;
                int pivot = px.next(0), best = -1;
                px.for_each([&](int u) {
                    int c = gg.adj(u).count_and(p);
                    if (c > best) { best = c; pivot = u; }
                });
                Bitset cand = p - gg.adj(pivot);
                for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
                    Bitset r2 = r;
                    r2.set(v);
                    run(r2, p & gg.adj(v), x & gg.adj(v));
                    p.reset(v);
                    x.set(v);
                }
            }
        };
        std::function<bool(const Bitset&)> fn = rigid_connected;
        BK bk{sub, fn};
        bk.run(Bitset(sub.node_count()), sub.full_set(), Bitset(sub.node_count()));
    }
}

} // namespace

std::vector<int> wing_partners(const WeightedGraph& g, const NodeClass& cls, int u) {
    std::vector<int> out;
    if (cls.is_bound(u)) {
        out.push_back(cls.snbr[u][0]);
        out.push_back(cls.snbr[u][1]);
        return out;
    }
    if (!cls.is_free(u)) return out;
    int su = cls.stable_of(u);
    for (int x : g.neighbors(u)) {
        if (!cls.is_free(x)) continue;
        int sx = cls.stable_of(x);
        if (sx != su) out.push_back(sx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// partners of u relative to a fixed stable node s (wings W(s, t) containing u)
std::vector<int> partners_rel(const WeightedGraph& g, const NodeClass& cls, int u, int s) {
    std::vector<int> out;
    if (cls.is_bound(u)) {
        if (cls.snbr[u][0] == s)
            out.push_back(cls.snbr[u][1]);
        else if (cls.snbr[u][1] == s)
            out.push_back(cls.snbr[u][0]);
        return out;
    }
    if (cls.is_free(u) && cls.stable_of(u) == s) return wing_partners(g, cls, u);
    return out;
}

// does u's free-dissimilarity component meet 3+ similarity classes?
bool in_big_free_component(const WeightedGraph& g, const NodeClass& cls, int u) {
    if (!cls.is_free(u)) return false;
    std::vector<int> stack{u};
    Bitset seen(g.node_count());
    seen.set(u);
    std::vector<int> classes{cls.stable_of(u)};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int x : g.neighbors(v)) {
            if (!cls.is_free(x) || seen.test(x)) continue;
            if (cls.stable_of(x) == cls.stable_of(v)) continue;
            seen.set(x);
            stack.push_back(x);
            if (std::find(classes.begin(), classes.end(), cls.stable_of(x)) == classes.end()) {
                classes.push_back(cls.stable_of(x));
                if (classes.size() >= 3) return true;
            }
        }
    }
    return false;
}

} // namespace

std::optional<int> polar_wing(const WeightedGraph& g, const NodeClass& cls,
                              const Bitset& clique, int s, bool certify) {
    Bitset outside = g.adj(s) - clique;
    if (outside.none()) return std::nullopt;
    // candidate polar nodes: wings that contain every outside neighbor
    std::vector<int> cand;
    bool first = true;
    bool dead = false;
    outside.for_each([&](int u) {
        if (dead) return;
        auto ps = partners_rel(g, cls, u, s);
        if (ps.empty()) { dead = true; return; } // inner free node outside: no wing holds it
        if (first) {
            cand = ps;
            first = false;
        } else {
            std::vector<int> merged;
            for (int r : cand)
                if (std::find(ps.begin(), ps.end(), r) != ps.end()) merged.push_back(r);
            cand = std::move(merged);
            if (cand.empty()) dead = true;
        }
    });
    if (dead || cand.empty()) return std::nullopt;
    std::vector<int> hits;
    for (int r : cand) {
        // crossing pair: x in the clique and wing W(s,r), adjacent to some
        // outside neighbor of s
        bool found = false;
        clique.for_each([&](int x) {
            if (found || x == s) return;
            auto px = partners_rel(g, cls, x, s);
            if (std::find(px.begin(), px.end(), r) == px.end()) return;
            if ((g.adj(x) & outside).any()) found = true;
        });
        if (found) hits.push_back(r);
    }
    if (hits.empty()) return std::nullopt;
    if (certify)
        MWSS_REQUIRE(hits.size() == 1, "two polar wings found for one cover clique");
    return hits.front();
}

SPartitionSpec s_partition(const WeightedGraph& g, const NodeClass& cls,
                           const Bitset& clique, int s, bool certify) {
    SPartitionSpec spec;
    spec.stable_node = s;
    int n = g.node_count();

    // free neighbors of s outside the clique decide the polar-wing split
    bool free_outside = false;
    (g.adj(s) - clique).for_each([&](int u) {
        if (cls.is_free(u) && cls.stable_of(u) == s) free_outside = true;
    });

    auto polar = polar_wing(g, cls, clique, s, certify);
    spec.polar_node = polar.value_or(-1);
    spec.split_polar = polar.has_value() && free_outside;

    std::map<int, Bitset> wing_part; // non-polar wing -> partial wing in clique
    Bitset center(n);
    center.set(s);
    Bitset polar_bound(n);
    bool bad = false;
    clique.for_each([&](int u) {
        if (u == s || bad) return;
        if (cls.is_free(u) && in_big_free_component(g, cls, u)) {
            bad = true; // clique meets a normal free component: not partitionable
            return;
        }
        auto ps = partners_rel(g, cls, u, s);
        if (ps.empty()) {
            center.set(u); // inner free node
            return;
        }
        MWSS_REQUIRE(ps.size() == 1,
                     "clique node in multiple wings outside a big free component");
        int t = ps.front();
        if (t == spec.polar_node) {
            if (!spec.split_polar) {
                center.set(u); // whole polar partial wing joins the center
            } else if (cls.is_bound(u)) {
                polar_bound.set(u);
            } else {
                center.set(u); // free part of the split polar wing
            }
        } else {
            auto it = wing_part.find(t);
            if (it == wing_part.end()) it = wing_part.emplace(t, Bitset(n)).first;
            it->second.set(u);
        }
    });
    if (bad) {
        spec.touches_big_free_component = true;
        return spec;
    }
    for (auto& [t, part] : wing_part) spec.parts.push_back(part);
    if (polar_bound.any()) spec.parts.push_back(polar_bound);
    spec.parts.push_back(center);
    return spec;
}

bool is_s_liftable(const WeightedGraph& g, const Matching& m, const Bitset& clique,
                   const SPartitionSpec& spec) {
    if (spec.touches_big_free_component) return false;
    if (spec.parts.size() < 2) return false;
    if (is_m_clique(g, clique, m.edges)) return false;
    if (spec.parts.size() >= 3) return true;
    Bitset vm = m.covered_set(g.node_count());
    int outside_vm = 0;
    for (const auto& p : spec.parts)
        if (!p.subset_of(vm)) ++outside_vm;
    return outside_vm >= 2;
}

void soft_lift_all(PipelineState& st, TagAllocator& tags) {
    auto cls = classify(st.g, st.ctx.s);
    auto cov = s_cover(st.g, st.ctx.s, cls);
    auto fs = free_components(st.g, st.ctx.s, cls);
    auto cands = dedup_cover_family(st.g, cov, fs);
    auto soft = soft_cliques(st.g, cands, st.opts.certify);
    for (auto& sc : soft) {
        Bitset q = sc.nodes;
        q.resize(st.g.node_count());
        std::vector<Bitset> parts = sc.partition;
        for (auto& p : parts) p.resize(st.g.node_count());
        auto lr = lift(st.g, q, parts, st.ctx, st.m, LiftPhase::Soft, tags, st.ledger,
                       st.opts.certify);
        ++st.stats.lifts_soft;
        Bitset touch = q;
        touch.resize(st.g.node_count());
        for (int v : lr.q_idx) touch.set(v);
        for (int v : lr.qbar_idx) touch.set(v);
        assert_canonical_after_lift(st, touch);
    }
    if (st.opts.structure_checks) check_after_soft(st);
}

void extract_quasiline(PipelineState& st) {
    Bitset vm = st.vm();
    Bitset keep = st.g.full_set();
    for (const Bitset& comp : st.g.components_without(st.m.edges)) {
        if (is_m_clique(st.g, comp, st.m.edges)) continue;
        Bitset matched = comp & vm;
        if (matched.count() > 2) continue;
        if (!alpha_at_most(st.g, comp - vm, 3)) continue;
        // detach
        SetAsideStrip strip;
        strip.sub = st.g.induced(comp);
        matched.for_each([&](int u) {
            int v = st.m.mate[u];
            MWSS_REQUIRE(v != -1 && !comp.test(v),
                         "strip boundary mate missing or inside the strip");
            strip.boundary.push_back({st.g.tag(u), st.g.tag(v), st.g.weight(v)});
        });
        st.strips.push_back(std::move(strip));
        ++st.stats.strips_extracted;
        keep -= comp;
    }
    // rebuild the working graph, matching, ledger twins and stable set
    std::vector<std::pair<Tag, Tag>> matched_tags;
    for (auto [u, v] : st.m.edges) {
        if (keep.test(u) && keep.test(v))
            matched_tags.push_back({st.g.tag(u), st.g.tag(v)});
        else
            MWSS_REQUIRE(keep.test(u) != keep.test(v),
                         "matching edge lost both endpoints at extraction");
    }
    std::vector<Tag> stable_tags;
    st.ctx.s.for_each([&](int v) {
        if (keep.test(v)) stable_tags.push_back(st.g.tag(v));
    });

    // adjacent twins only: merging non-adjacent pairs here would fuse the
    // clique slots of distinct strip partners
    WeightedGraph h = st.g.induced(keep);
    auto [reduced, twins] = remove_twins(h, true);
    for (const auto& t : twins) st.ledger.push_back(LedgerTwin{t});

    st.g = std::move(reduced);
    st.m = Matching{};
    st.m.ensure(st.g.node_count());
    for (auto [tu, tv] : matched_tags) {
        MWSS_REQUIRE(st.g.has_tag(tu) && st.g.has_tag(tv),
                     "matched node removed by twin reduction");
        st.m.add(st.g.index_of(tu), st.g.index_of(tv));
    }
    Bitset s0(st.g.node_count());
    for (Tag t : stable_tags)
        if (st.g.has_tag(t)) s0.set(st.g.index_of(t));
    st.ctx = StableContext::build(st.g, canonicalize(st.g, s0));
    // the matching must stay saturated by the refreshed stable set
    for (auto [u, v] : st.m.edges)
        MWSS_REQUIRE(st.ctx.s.test(u) != st.ctx.s.test(v),
                     "matching edge lost stable saturation after extraction");

    if (st.opts.structure_checks) {
        for (int v = 0; v < st.g.node_count(); ++v)
            MWSS_REQUIRE(is_regular(st.g, v),
                         "irregular node survived extraction (tag " +
                             std::to_string(st.g.tag(v)) + ")");
    }
}

void free_lift_all(PipelineState& st, TagAllocator& tags) {
    int start_nodes = st.g.node_count();
    auto& cls = st.ctx.cls;
    auto wm = wings(st.g, st.ctx.s, cls);
    auto fs = free_components(st.g, st.ctx.s, cls);
    auto cov = s_cover(st.g, st.ctx.s, cls);
    auto list = build_candidates(st.g, st.ctx.s, cls, wm, fs, cov, true, st.opts.certify);

    // pre: every matched free node already sits in an M-clique
    if (st.opts.structure_checks) {
        for (int v = 0; v < st.g.node_count(); ++v) {
            if (!cls.is_free(v) || !st.m.covers(v)) continue;
            Bitset k = st.g.closed_nh(v);
            k.reset(st.m.mate[v]);
            MWSS_REQUIRE(is_m_clique(st.g, k, st.m.edges),
                         "matched free node outside any M-clique before free lifting");
        }
    }

    for (const auto& e : list.entries) {
        if (!e.alive || e.origin != CliqueOrigin::FreeComponent) continue;
        Bitset q = e.nodes;
        q.resize(st.g.node_count());
        if (is_m_clique(st.g, q, st.m.edges)) continue;
        // partition by stable neighbor (= similarity class)
        std::map<int, Bitset> by_class;
        q.for_each([&](int v) {
            MWSS_REQUIRE(st.ctx.cls.is_free(v), "free component contains a non-free node");
            int sv = st.ctx.cls.stable_of(v);
            auto it = by_class.find(sv);
            if (it == by_class.end()) it = by_class.emplace(sv, Bitset(st.g.node_count())).first;
            it->second.set(v);
        });
        std::vector<Bitset> parts;
        for (auto& [sv, p] : by_class) parts.push_back(p);
        auto lr = lift(st.g, q, parts, st.ctx, st.m, LiftPhase::FreeComponent, tags, st.ledger,
                       st.opts.certify);
        ++st.stats.lifts_free;
        Bitset touch = q;
        touch.resize(st.g.node_count());
        for (int v : lr.q_idx) touch.set(v);
        for (int v : lr.qbar_idx) touch.set(v);
        assert_canonical_after_lift(st, touch);
    }
    MWSS_REQUIRE(st.g.node_count() - start_nodes <= 2 * start_nodes,
                 "free lifting grew the graph beyond the 2|V| budget");

    if (st.opts.structure_checks) {
        // free-lifted: every weakly normal free component is an M-clique now
        auto cls2 = classify(st.g, st.ctx.s);
        auto fs2 = free_components(st.g, st.ctx.s, cls2);
        for (int fi : fs2.family) {
            const Bitset& q = fs2.gf_components[fi];
            if (!is_weakly_normal(st.g, q)) continue;
            MWSS_REQUIRE(is_m_clique(st.g, q, st.m.edges),
                         "liftable free component left over after free lifting");
        }
        for (int v = 0; v < st.g.node_count(); ++v) {
            if (!cls2.is_free(v) || !st.m.covers(v)) continue;
            Bitset k = st.g.closed_nh(v);
            k.reset(st.m.mate[v]);
            MWSS_REQUIRE(is_m_clique(st.g, k, st.m.edges),
                         "matched free node outside any M-clique after free lifting");
        }
    }
}

void s_lift_loop(PipelineState& st, TagAllocator& tags) {
    int budget_nodes = st.g.node_count();
    auto& cls = st.ctx.cls;
    auto wm = wings(st.g, st.ctx.s, cls);
    auto fs = free_components(st.g, st.ctx.s, cls);
    auto cover = s_cover(st.g, st.ctx.s, cls);
    auto list = build_candidates(st.g, st.ctx.s, cls, wm, fs, cover, true, st.opts.certify);

    int iterations = 0;
    const int bound = 4 * budget_nodes + 16;
    for (;;) {
        // deterministic scan: smallest stable tag first
        std::vector<int> order;
        for (std::size_t i = 0; i < list.entries.size(); ++i) {
            const auto& e = list.entries[i];
            if (!e.alive || e.origin == CliqueOrigin::FreeComponent) continue;
            order.push_back(static_cast<int>(i));
        }
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Tag ta = st.g.tag(list.entries[a].stable_node);
            Tag tb = st.g.tag(list.entries[b].stable_node);
            if (ta != tb) return ta < tb;
            return a < b;
        });
        int chosen = -1;
        SPartitionSpec spec;
        for (int li : order) {
            auto& e = list.entries[li];
            Bitset q = e.nodes;
            q.resize(st.g.node_count());
            e.nodes = q;
            spec = s_partition(st.g, st.ctx.cls, q, e.stable_node, st.opts.certify);
            if (is_s_liftable(st.g, st.m, q, spec)) {
                chosen = li;
                break;
            }
        }
        if (chosen == -1) break;

        MWSS_REQUIRE(++iterations <= bound, "S-lifting iteration budget exceeded");
        auto& entry = list.entries[chosen];
        Bitset q = entry.nodes;
        int s_node = entry.stable_node;
        bool had_outside = (st.g.adj(s_node) - q).any();
        Matching pre_m = st.m;
        auto lr = lift(st.g, q, spec.parts, st.ctx, st.m, LiftPhase::SLifting, tags, st.ledger,
                       st.opts.certify);
        ++st.stats.lifts_s;
        extend_cover(cover, st.g, st.ctx, s_node, lr, spec.parts);
        update_candidates(list, st.g, st.ctx, pre_m, chosen, s_node, spec.parts, lr,
                          had_outside);
        Bitset touch = q;
        touch.resize(st.g.node_count());
        for (int v : lr.q_idx) touch.set(v);
        for (int v : lr.qbar_idx) touch.set(v);
        assert_canonical_after_lift(st, touch);
        if (st.opts.certify) {
            // cover invariants after the update
            for (const auto& ce : cover.entries) {
                if (ce.s >= st.g.node_count()) continue;
                MWSS_REQUIRE(st.g.is_clique(ce.c) && st.g.is_clique(ce.cbar),
                             "cover update produced a non-clique");
                Bitset nh = st.g.closed_nh(ce.s);
                MWSS_REQUIRE(nh.subset_of(ce.c | ce.cbar),
                             "cover update lost the closed neighborhood");
            }
        }
    }
    st.stats.s_iterations = iterations;

    if (st.opts.structure_checks) {
        Bitset vm = st.vm();
        Bitset in_mclique(st.g.node_count());
        for (const Bitset& comp : st.g.components_without(st.m.edges)) {
            if (is_m_clique(st.g, comp, st.m.edges)) {
                in_mclique |= comp;
                continue;
            }
            MWSS_REQUIRE((comp & vm).count() <= 2,
                         "strip component with 3+ matched nodes after S-lifting");
        }
        MWSS_REQUIRE(check_basic(st.g, st.m.edges),
                     "working graph is not basic after the S-lifting loop");
        // stable nodes outside V(M) and outside every M-clique end with wing
        // number <= 2
        auto wm2 = wings(st.g, st.ctx.s, st.ctx.cls);
        for (int v = st.ctx.s.next(0); v != -1; v = st.ctx.s.next(v + 1)) {
            if (st.m.covers(v) || in_mclique.test(v)) continue;
            MWSS_REQUIRE(wm2.wing_count[v] <= 2,
                         "unmatched stable node with 3+ wings after S-lifting");
        }
    }
}

PipelineState run_pipeline(WeightedGraph component, const PipelineOptions& opts,
                           TagAllocator& tags) {
    PipelineState st;
    st.opts = opts;
    st.stats.original_nodes = component.node_count();
    st.g = std::move(component);
    st.m.ensure(st.g.node_count());
    st.input_five_wheel_free =
        opts.certify && st.g.node_count() <= opts.heavy_check_limit &&
        !has_five_wheel(st.g);
    st.ctx = StableContext::build(st.g, canonicalize(st.g, greedy_maximal_stable_set(st.g)));

    soft_lift_all(st, tags);
    extract_quasiline(st);
    if (st.g.node_count() > 0) {
        free_lift_all(st, tags);
        s_lift_loop(st, tags);
    }
    st.stats.final_nodes = st.g.node_count();
    for (const auto& strip : st.strips) st.stats.final_nodes += strip.sub.node_count();
    return st;
}

} // namespace mwss
