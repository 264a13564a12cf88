// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/lifting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mwss/oracle.hpp"

namespace mwss {

LiftResult lift(WeightedGraph& g, const Bitset& q, const std::vector<Bitset>& partition,
                StableContext& ctx, Matching& m, LiftPhase phase,
                TagAllocator& tags, LiftLedger& ledger, bool verify) {
    MWSS_REQUIRE(!partition.empty(), "lift: empty partition");
    if (verify && partition.size() >= 2)
        MWSS_REQUIRE(check_liftable(g, q, partition), "lift: clique is not liftable");

    int p = static_cast<int>(partition.size());
    Weight w_m = g.max_weight() + 1;

    LiftRecord rec;
    rec.phase = phase;
    rec.w_m = w_m;
    rec.clique = g.tags_of(q);
    for (const auto& part : partition) rec.parts.push_back(g.tags_of(part));

    // remove cross-part edges
    std::vector<int> part_of(g.node_count(), -1);
    for (int i = 0; i < p; ++i)
        partition[i].for_each([&](int v) { part_of[v] = i; });
    std::vector<int> qv = q.to_vector();
    for (std::size_t i = 0; i < qv.size(); ++i)
        for (std::size_t j = i + 1; j < qv.size(); ++j) {
            int a = qv[i], b = qv[j];
            if (part_of[a] != part_of[b]) {
                rec.removed_edges.push_back({g.tag(a), g.tag(b)});
                g.remove_edge(a, b);
            }
        }

    // new nodes and edges
    LiftResult res;
    for (int i = 0; i < p; ++i) {
        int qi = g.add_node(tags.next(), w_m);
        int qbi = g.add_node(tags.next(), w_m);
        res.q_idx.push_back(qi);
        res.qbar_idx.push_back(qbi);
        rec.q.push_back(g.tag(qi));
        rec.qbar.push_back(g.tag(qbi));
    }
    for (int i = 0; i < p; ++i) {
        g.add_edge(res.q_idx[i], res.qbar_idx[i]);
        partition[i].for_each([&](int t) { g.add_edge(res.q_idx[i], t); });
        for (int j = i + 1; j < p; ++j) g.add_edge(res.qbar_idx[i], res.qbar_idx[j]);
    }

    // extensions of S and M
    int n = g.node_count();
    ctx.s.resize(n);
    ctx.cls.kind.resize(n, NodeClass::Superfree);
    ctx.cls.snbr.resize(n, {-1, -1});
    for (int i = 0; i < p; ++i) {
        bool part_has_stable = partition[i].intersects(ctx.s);
        if (part_has_stable)
            ctx.s.set(res.qbar_idx[i]);
        else
            ctx.s.set(res.q_idx[i]);
    }
    // reclassify the lifted clique and the new nodes from scratch
    auto reclassify = [&](int v) {
        if (ctx.s.test(v)) {
            ctx.cls.kind[v] = NodeClass::Stable;
            ctx.cls.snbr[v] = {-1, -1};
            return;
        }
        Bitset sn = g.adj(v) & ctx.s;
        int c = sn.count();
        MWSS_REQUIRE(c <= 2, "lift: node gained a third stable neighbor");
        ctx.cls.snbr[v] = {-1, -1};
        if (c == 0) {
            ctx.cls.kind[v] = NodeClass::Superfree;
        } else if (c == 1) {
            ctx.cls.kind[v] = NodeClass::Free;
            ctx.cls.snbr[v][0] = sn.next(0);
        } else {
            ctx.cls.kind[v] = NodeClass::Bound;
            ctx.cls.snbr[v][0] = sn.next(0);
            ctx.cls.snbr[v][1] = sn.next(ctx.cls.snbr[v][0] + 1);
        }
    };
    q.for_each(reclassify);
    for (int i = 0; i < p; ++i) {
        reclassify(res.q_idx[i]);
        reclassify(res.qbar_idx[i]);
    }

    m.ensure(n);
    for (int i = 0; i < p; ++i) m.add(res.q_idx[i], res.qbar_idx[i]);

    if (verify) {
        Bitset touch = q;
        touch.resize(n);
        for (int i = 0; i < p; ++i) { touch.set(res.q_idx[i]); touch.set(res.qbar_idx[i]); }
        auto claw = find_claw_near(g, touch);
        MWSS_REQUIRE(!claw, "lift: lifted graph contains a claw");
    }

    res.record_index = static_cast<int>(ledger.size());
    ledger.push_back(std::move(rec));
    return res;
}

std::vector<Tag> unwind(const std::vector<Tag>& final_set, const LiftLedger& ledger) {
    std::set<Tag> cur(final_set.begin(), final_set.end());
    MWSS_REQUIRE(cur.size() == final_set.size(), "unwind: duplicate tags in solution");
    for (auto it = ledger.rbegin(); it != ledger.rend(); ++it) {
        if (std::holds_alternative<LiftRecord>(*it)) {
            const auto& rec = std::get<LiftRecord>(*it);
            for (std::size_t i = 0; i < rec.q.size(); ++i) {
                bool has_q = cur.count(rec.q[i]) != 0;
                bool has_qbar = cur.count(rec.qbar[i]) != 0;
                MWSS_REQUIRE(!(has_q && has_qbar), "unwind: both ends of a lifting edge selected");
                MWSS_REQUIRE(has_q || has_qbar,
                             "unwind: lifting pair not represented (solution is not optimal "
                             "or the chain is corrupt)");
                cur.erase(rec.q[i]);
                cur.erase(rec.qbar[i]);
            }
            // the surviving clique members must sit inside one part, or the
            // set would not be stable once the removed edges return
            int part_hit = -1;
            for (std::size_t i = 0; i < rec.parts.size(); ++i) {
                for (Tag t : rec.parts[i]) {
                    if (!cur.count(t)) continue;
                    MWSS_REQUIRE(part_hit == -1 || part_hit == static_cast<int>(i),
                                 "unwind: selected clique nodes span multiple parts");
                    part_hit = static_cast<int>(i);
                }
            }
        } else {
            const auto& tw = std::get<LedgerTwin>(*it).twin;
            if (tw.adjacent) {
                MWSS_REQUIRE(!(cur.count(tw.kept) && cur.count(tw.removed)),
                             "unwind: both adjacent twins selected");
            } else if (cur.count(tw.kept)) {
                cur.insert(tw.removed);
            }
        }
    }
    return {cur.begin(), cur.end()};
}

void extend_cover(SCover& cover, const WeightedGraph& g, const StableContext& ctx,
                  int lifted_stable, const LiftResult& lr,
                  const std::vector<Bitset>& partition) {
    int n = g.node_count();
    for (auto& e : cover.entries) {
        e.c.resize(n);
        e.cbar.resize(n);
    }
    cover.entry_of.resize(n, -1);

    int p = static_cast<int>(partition.size());
    int h = -1;
    for (int i = 0; i < p; ++i)
        if (partition[i].test(lifted_stable)) h = i;
    MWSS_REQUIRE(h != -1, "extend_cover: lifted clique does not contain its stable node");

    Bitset lifting_clique(n);
    for (int i = 0; i < p; ++i) lifting_clique.set(lr.qbar_idx[i]);

    auto part_clique = [&](int i) {
        Bitset c = partition[i];
        c.resize(n);
        c.set(lr.q_idx[i]);
        return c;
    };
    auto edge_clique = [&](int i) {
        Bitset c(n);
        c.set(lr.q_idx[i]);
        c.set(lr.qbar_idx[i]);
        return c;
    };

    // s keeps its entry with the lifted side replaced by its part clique
    int se = cover.entry_of[lifted_stable];
    MWSS_REQUIRE(se != -1, "extend_cover: lifted stable node has no cover entry");
    // identify which side was lifted: the one contains a removed cross edge,
    // i.e. equals the union of the partition
    Bitset lifted_clique(n);
    for (int i = 0; i < p; ++i) lifted_clique |= partition[i];
    if (cover.entries[se].c == lifted_clique)
        cover.entries[se].c = part_clique(h);
    else if (cover.entries[se].cbar == lifted_clique)
        cover.entries[se].cbar = part_clique(h);
    else
        throw solver_error("extend_cover: lifted clique not found in the cover entry");

    for (int i = 0; i < p; ++i) {
        if (ctx.s.test(lr.qbar_idx[i])) {
            cover.entry_of[lr.qbar_idx[i]] = static_cast<int>(cover.entries.size());
            cover.entries.push_back({lr.qbar_idx[i], lifting_clique, edge_clique(i)});
        } else if (ctx.s.test(lr.q_idx[i])) {
            cover.entry_of[lr.q_idx[i]] = static_cast<int>(cover.entries.size());
            cover.entries.push_back({lr.q_idx[i], part_clique(i), edge_clique(i)});
        }
    }
}

void update_candidates(CandidateList& list, const WeightedGraph& g,
                       const StableContext& ctx, const Matching& pre_lift_m,
                       int lifted_entry, int lifted_stable,
                       const std::vector<Bitset>& partition, const LiftResult& lr,
                       bool had_outside_neighbors) {
    int n = g.node_count();
    for (auto& e : list.entries) e.nodes.resize(n);
    list.entries[lifted_entry].alive = false;

    for (std::size_t i = 0; i < partition.size(); ++i) {
        bool has_matched = false;
        partition[i].for_each([&](int v) {
            if (v < static_cast<int>(pre_lift_m.mate.size()) && pre_lift_m.mate[v] != -1)
                has_matched = true;
        });
        if (has_matched) continue; // the new clique is an M-clique
        bool s_part = partition[i].test(lifted_stable);
        if (s_part && !had_outside_neighbors) continue; // M-clique case of the s part
        Bitset c = partition[i];
        c.resize(n);
        c.set(lr.q_idx[i]);
        int stable_node = s_part ? lifted_stable : lr.q_idx[i];
        list.entries.push_back({std::move(c), CliqueOrigin::Lifted, stable_node, true});
    }
}

std::string render_ledger(const LiftLedger& ledger) {
    std::ostringstream out;
    auto tag_list = [](const std::vector<Tag>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    for (const auto& entry : ledger) {
        if (std::holds_alternative<LiftRecord>(entry)) {
            const auto& r = std::get<LiftRecord>(entry);
            out << "lift phase=";
            switch (r.phase) {
                case LiftPhase::Soft: out << "soft"; break;
                case LiftPhase::FreeComponent: out << "free"; break;
                case LiftPhase::SLifting: out << "s"; break;
            }
            out << " wM=" << r.w_m << " clique=" << tag_list(r.clique) << " parts=";
            for (std::size_t i = 0; i < r.parts.size(); ++i) {
                if (i) out << '|';
                out << tag_list(r.parts[i]);
            }
            out << " q=" << tag_list(r.q) << " qbar=" << tag_list(r.qbar) << " removed=";
            for (std::size_t i = 0; i < r.removed_edges.size(); ++i) {
                if (i) out << ',';
                out << r.removed_edges[i].first << '-' << r.removed_edges[i].second;
            }
            out << '\n';
        } else {
            const auto& t = std::get<LedgerTwin>(entry).twin;
            out << "twin kept=" << t.kept << " removed=" << t.removed
                << " adjacent=" << (t.adjacent ? 1 : 0) << " w=" << t.removed_weight << '\n';
        }
    }
    return out.str();
}

} // namespace mwss
