// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/stable_context.hpp"

#include <algorithm>

namespace mwss {

NodeClass classify(const WeightedGraph& g, const Bitset& s) {
    int n = g.node_count();
    NodeClass out;
    out.kind.assign(n, NodeClass::Superfree);
    out.snbr.assign(n, {-1, -1});
    for (int v = 0; v < n; ++v) {
        if (s.test(v)) {
            out.kind[v] = NodeClass::Stable;
            continue;
        }
        Bitset sn = g.adj(v) & s;
        int c = sn.count();
        if (c == 0) {
            out.kind[v] = NodeClass::Superfree;
        } else if (c == 1) {
            out.kind[v] = NodeClass::Free;
            out.snbr[v][0] = sn.next(0);
        } else if (c == 2) {
            out.kind[v] = NodeClass::Bound;
            out.snbr[v][0] = sn.next(0);
            out.snbr[v][1] = sn.next(out.snbr[v][0] + 1);
        } else {
            throw solver_error("classify: node with 3+ stable neighbors (input not claw-free?)");
        }
    }
    return out;
}

WingMap wings(const WeightedGraph& g, const Bitset& s, const NodeClass& cls) {
    int n = g.node_count();
    WingMap wm;
    wm.wing_of.assign(n, -1);
    wm.wing_count.assign(n, 0);
    wm.wings_of_stable.assign(n, {});
    wm.outer = Bitset(n);

    auto wing_at = [&](int a, int b) -> Wing& {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = wm.index.find(key);
        if (it == wm.index.end()) {
            Wing w;
            w.s = key.first;
            w.t = key.second;
            w.bound = Bitset(n);
            w.free_st = Bitset(n);
            w.free_ts = Bitset(n);
            wm.index[key] = static_cast<int>(wm.wings.size());
            wm.wings.push_back(std::move(w));
            it = wm.index.find(key);
        }
        return wm.wings[it->second];
    };

    for (int v = 0; v < n; ++v) {
        if (cls.is_bound(v)) {
            Wing& w = wing_at(cls.snbr[v][0], cls.snbr[v][1]);
            w.bound.set(v);
            wm.wing_of[v] = wm.index.at({w.s, w.t});
        } else if (cls.is_free(v)) {
            int sv = cls.stable_of(v);
            // outer iff some free neighbor is dissimilar
            for (int u : g.neighbors(v)) {
                if (!cls.is_free(u)) continue;
                int su = cls.stable_of(u);
                if (su == sv) continue;
                wm.outer.set(v);
                Wing& w = wing_at(sv, su);
                if (sv == w.s)
                    w.free_st.set(v);
                else
                    w.free_ts.set(v);
                wm.wing_of[v] = wm.index.at({w.s, w.t}); // one witness wing kept
            }
        }
    }
    for (std::size_t i = 0; i < wm.wings.size(); ++i) {
        const Wing& w = wm.wings[i];
        wm.wings_of_stable[w.s].push_back(static_cast<int>(i));
        wm.wings_of_stable[w.t].push_back(static_cast<int>(i));
        ++wm.wing_count[w.s];
        ++wm.wing_count[w.t];
    }
    return wm;
}

FreeStructure free_components(const WeightedGraph& g, const Bitset& s, const NodeClass& cls) {
    int n = g.node_count();
    FreeStructure fs;
    fs.component_of.assign(n, -1);

    // union-find over free nodes, edges between adjacent dissimilar frees
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < n; ++v) {
        if (!cls.is_free(v)) continue;
        for (int u : g.neighbors(v)) {
            if (u >= v) break;
            if (!cls.is_free(u)) continue;
            if (cls.stable_of(u) == cls.stable_of(v)) continue;
            int a = find(u), b = find(v);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, int> id;
    for (int v = 0; v < n; ++v) {
        if (!cls.is_free(v)) continue;
        int r = find(v);
        auto it = id.find(r);
        if (it == id.end()) {
            id[r] = static_cast<int>(fs.gf_components.size());
            fs.gf_components.emplace_back(n);
            it = id.find(r);
        }
        fs.gf_components[it->second].set(v);
        fs.component_of[v] = it->second;
    }
    fs.is_free_component.assign(fs.gf_components.size(), 0);
    fs.classes_met.assign(fs.gf_components.size(), 0);
    for (std::size_t i = 0; i < fs.gf_components.size(); ++i) {
        const Bitset& c = fs.gf_components[i];
        // similarity classes met = distinct stable neighbors
        std::vector<int> met;
        c.for_each([&](int v) { met.push_back(cls.stable_of(v)); });
        std::sort(met.begin(), met.end());
        met.erase(std::unique(met.begin(), met.end()), met.end());
        fs.classes_met[i] = static_cast<int>(met.size());
        if (met.size() >= 2 && g.is_maximal_clique(c)) {
            fs.is_free_component[i] = 1;
            fs.family.push_back(static_cast<int>(i));
        }
    }
    (void)s;
    return fs;
}

namespace {

// extend a clique to a maximal one, adding smallest-tag admissible nodes
Bitset extend_to_maximal(const WeightedGraph& g, Bitset c) {
    for (;;) {
        // candidates: adjacent to every member
        Bitset cand = g.full_set();
        c.for_each([&](int v) { cand &= g.adj(v); });
        cand -= c;
        int pick = -1;
        Tag pick_tag = 0;
        cand.for_each([&](int v) {
            if (pick == -1 || g.tag(v) < pick_tag) { pick = v; pick_tag = g.tag(v); }
        });
        if (pick == -1) return c;
        c.set(pick);
    }
}

} // namespace

SCover s_cover(const WeightedGraph& g, const Bitset& s, const NodeClass& cls) {
    (void)cls;
    SCover cov;
    cov.entry_of.assign(g.node_count(), -1);
    for (int v = s.next(0); v != -1; v = s.next(v + 1)) {
        auto rc = regular_cover(g, v);
        if (!rc) continue; // irregular stable nodes are omitted
        Bitset c1 = Bitset::of(g.node_count(), rc->first);
        Bitset c2 = Bitset::of(g.node_count(), rc->second);
        c1.set(v);
        c2.set(v);
        c1 = extend_to_maximal(g, c1);
        c2 = extend_to_maximal(g, c2);
        cov.entry_of[v] = static_cast<int>(cov.entries.size());
        cov.entries.push_back({v, std::move(c1), std::move(c2)});
    }
    return cov;
}

Bitset greedy_maximal_stable_set(const WeightedGraph& g) {
    return maximalize(g, Bitset(g.node_count()));
}

Bitset maximalize(const WeightedGraph& g, Bitset s) {
    int n = g.node_count();
    s.resize(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
        return g.tag(a) < g.tag(b);
    });
    Bitset blocked(n);
    s.for_each([&](int v) { blocked |= g.adj(v); });
    for (int v : order) {
        if (s.test(v) || blocked.test(v)) continue;
        s.set(v);
        blocked |= g.adj(v);
    }
    return s;
}

Bitset canonicalize(const WeightedGraph& g, Bitset s0) {
    int n = g.node_count();
    Bitset s = maximalize(g, std::move(s0));
    std::vector<int> by_tag(n);
    for (int i = 0; i < n; ++i) by_tag[i] = i;
    std::sort(by_tag.begin(), by_tag.end(),
              [&](int a, int b) { return g.tag(a) < g.tag(b); });
    for (;;) {
        NodeClass cls = classify(g, s);
        // (a) augmenting P3: first (t, u, v) in tag order
        int at = -1, au = -1, av = -1;
        for (int t : by_tag) {
            if (!s.test(t)) continue;
            std::vector<int> fr;
            for (int u : g.neighbors(t))
                if (cls.is_free(u) && cls.stable_of(u) == t) fr.push_back(u);
            std::sort(fr.begin(), fr.end(), [&](int a, int b) { return g.tag(a) < g.tag(b); });
            for (std::size_t i = 0; i < fr.size() && at == -1; ++i)
                for (std::size_t j = i + 1; j < fr.size(); ++j)
                    if (!g.adjacent(fr[i], fr[j])) {
                        at = t; au = fr[i]; av = fr[j];
                        break;
                    }
            if (at != -1) break;
        }
        if (at != -1) {
            s.reset(at);
            s.set(au);
            s.set(av);
            s = maximalize(g, std::move(s));
            continue;
        }
        // (b) dominating free node, guarded for twin pairs
        int bx = -1;
        for (int x = 0; x < n; ++x) {
            if (!cls.is_free(x)) continue;
            int t = cls.stable_of(x);
            Bitset nt = g.adj(t);
            nt.reset(x);
            const Bitset& nx = g.adj(x);
            if (!nt.subset_of(nx)) continue;
            int cx = nx.count(), ct = g.adj(t).count();
            bool progress = cx > ct || (cx == ct && g.tag(x) < g.tag(t));
            if (!progress) continue;
            if (bx == -1 || g.tag(x) < g.tag(bx)) bx = x;
        }
        if (bx == -1) break;
        s.reset(cls.stable_of(bx));
        s.set(bx);
    }
    return s;
}

StableContext StableContext::build(const WeightedGraph& g, Bitset s) {
    StableContext ctx;
    ctx.s = std::move(s);
    ctx.cls = classify(g, ctx.s);
    return ctx;
}

} // namespace mwss
