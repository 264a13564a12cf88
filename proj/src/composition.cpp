// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/composition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mwss/component_solver.hpp"
#include "mwss/oracle.hpp"

namespace mwss {

namespace {

// Resolve a strip partner through adjacent-twin removals: the removed twin
// still decodes under its own tag, but the root clique hosting the choice is
// the kept twin's component.
Tag resolve_partner(const WeightedGraph& basic, const LiftLedger& ledger, Tag partner) {
    Tag cur = partner;
    bool progress = true;
    while (!basic.has_tag(cur) && progress) {
        progress = false;
        for (const auto& entry : ledger) {
            if (!std::holds_alternative<LedgerTwin>(entry)) continue;
            const auto& tw = std::get<LedgerTwin>(entry).twin;
            if (tw.removed == cur) {
                MWSS_REQUIRE(tw.adjacent, "strip partner merged as a non-adjacent twin");
                cur = tw.kept;
                progress = true;
                break;
            }
        }
    }
    MWSS_REQUIRE(basic.has_tag(cur),
                 "strip partner " + std::to_string(partner) + " cannot be located");
    return cur;
}

ComponentSolution solve_exact(const WeightedGraph& g, const Bitset& nodes,
                              const Bitset& fin, const Bitset& fout, const Bitset& matched) {
    if (alpha_at_most(g, nodes - matched, 3))
        return solve_component_alpha3(g, nodes, fin, fout);
    return solve_component(g, nodes, fin, fout);
}

} // namespace

Decomposition decompose_basic(const WeightedGraph& basic, const Matching& m,
                              const std::vector<SetAsideStrip>& aside,
                              const LiftLedger& ledger) {
    Decomposition dec;
    int n = basic.node_count();
    Bitset vm = m.covered_set(n);

    std::vector<Bitset> strip_comps;
    std::vector<Bitset> isolated;
    std::vector<Bitset> cliques;
    if (n > 0) {
        for (const Bitset& c : basic.components_without(m.edges)) {
            if (is_m_clique(basic, c, m.edges)) {
                cliques.push_back(c);
            } else if (!(c & vm).any()) {
                isolated.push_back(c);
            } else {
                MWSS_REQUIRE((c & vm).count() <= 2, "strip component with 3+ matched nodes");
                strip_comps.push_back(c);
            }
        }
    }

    // boundary partners decide which isolated components get promoted to
    // root cliques
    std::set<Tag> partner_hosts;
    std::vector<std::vector<Tag>> aside_resolved(aside.size());
    for (std::size_t i = 0; i < aside.size(); ++i)
        for (const auto& b : aside[i].boundary) {
            Tag host = resolve_partner(basic, ledger, b.partner);
            aside_resolved[i].push_back(host);
            partner_hosts.insert(host);
        }
    for (const Bitset& c : strip_comps)
        (c & vm).for_each([&](int u) { partner_hosts.insert(basic.tag(m.mate[u])); });

    for (Bitset& c : isolated) {
        bool hosts = false;
        c.for_each([&](int v) {
            if (partner_hosts.count(basic.tag(v))) hosts = true;
        });
        if (hosts) {
            MWSS_REQUIRE(basic.is_clique(c), "strip partner inside a non-clique component");
            cliques.push_back(c);
        } else {
            dec.isolated_components.push_back(c);
        }
    }

    std::map<Tag, int> clique_of;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        cliques[i].for_each([&](int v) { clique_of[basic.tag(v)] = static_cast<int>(i); });
    for (auto [u, v] : m.edges) {
        bool cu = clique_of.count(basic.tag(u)) != 0, cv = clique_of.count(basic.tag(v)) != 0;
        MWSS_REQUIRE(cu || cv, "matching edge with both endpoints in strip components");
    }

    dec.clique_components = std::move(cliques);
    for (const auto& c : dec.clique_components) dec.clique_tags.push_back(basic.tags_of(c));

    for (const Bitset& c : strip_comps) {
        StripInstance si;
        si.sub = basic.induced(c);
        (c & vm).for_each([&](int u) {
            int v = m.mate[u];
            MWSS_REQUIRE(clique_of.count(basic.tag(v)) != 0,
                         "strip boundary mate outside every clique component");
            si.boundary.push_back(
                {basic.tag(u), basic.tag(v), basic.weight(v), basic.tag(v)});
        });
        dec.strips.push_back(std::move(si));
    }
    for (std::size_t i = 0; i < aside.size(); ++i) {
        StripInstance si;
        si.sub = aside[i].sub;
        for (std::size_t k = 0; k < aside[i].boundary.size(); ++k) {
            const auto& b = aside[i].boundary[k];
            si.boundary.push_back({b.inner, b.partner, b.partner_weight, aside_resolved[i][k]});
        }
        dec.strips.push_back(std::move(si));
    }
    return dec;
}

StripValues strip_values(const StripInstance& strip) {
    StripValues sv;
    sv.boundaries = static_cast<int>(strip.boundary.size());
    MWSS_REQUIRE(sv.boundaries <= 2, "strip with 3+ boundary nodes");
    const WeightedGraph& g = strip.sub;
    int n = g.node_count();

    std::vector<int> inner;
    for (const auto& b : strip.boundary) inner.push_back(g.index_of(b.inner));
    if (sv.boundaries == 2)
        MWSS_REQUIRE(!g.adjacent(inner[0], inner[1]), "adjacent strip boundary nodes");

    Bitset all = g.full_set();
    Bitset matched(n);
    for (int v : inner) matched.set(v);

    int amax = sv.boundaries >= 1 ? 1 : 0;
    int bmax = sv.boundaries >= 2 ? 1 : 0;
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            Bitset fin(n), fout(n);
            if (sv.boundaries >= 1) (a ? fin : fout).set(inner[0]);
            if (sv.boundaries >= 2) (b ? fin : fout).set(inner[1]);
            ComponentSolution sol = solve_exact(g, all, fin, fout, matched);
            sv.value[a][b] = sol.weight;
            sv.witness[a][b] = g.tags_of(sol.set);
        }
    return sv;
}

namespace {

void certify_strip(const StripInstance& strip, const StripValues& sv) {
    const WeightedGraph& g = strip.sub;
    for (int a = 0; a <= (sv.boundaries >= 1 ? 1 : 0); ++a)
        for (int b = 0; b <= (sv.boundaries >= 2 ? 1 : 0); ++b) {
            Bitset w = g.set_of_tags(sv.witness[a][b]);
            MWSS_REQUIRE(g.is_stable(w), "strip witness is not stable");
            MWSS_REQUIRE(g.set_weight_sum(w) == sv.value[a][b], "strip witness weight mismatch");
            Weight cap = sv.value[0][0];
            for (int k = 0; k < sv.boundaries; ++k) {
                bool in = k == 0 ? a == 1 : b == 1;
                int idx = g.index_of(strip.boundary[k].inner);
                MWSS_REQUIRE(w.test(idx) == in, "strip witness violates its boundary pattern");
                if (in) cap += g.weight(idx);
            }
            MWSS_REQUIRE(sv.value[a][b] <= cap, "strip value exceeds its sanity cap");
        }
}

// exhaustive state check over one gadget: every local matching decodes to a
// pattern whose value identity holds
void certify_gadget(const RootInstance& ri, const RootInstance::StripGadget& gg) {
    std::vector<int> ids;
    for (int id : {gg.e_r1, gg.e_r2, gg.e_t1l, gg.e_t2l, gg.e_t1t2})
        if (id != -1) ids.push_back(id);
    int k = static_cast<int>(ids.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        // local matching: no two selected edges share a node
        std::map<int, int> deg;
        bool ok = true;
        Weight pattern_sum = 0;
        int a = 0, b = 0;
        for (int i = 0; i < k && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& e = ri.graph.edges[ids[i]];
            if (++deg[e.u] > 1 || ++deg[e.v] > 1) ok = false;
            if (ids[i] == gg.e_t1l || ids[i] == gg.e_t1t2) a = 1;
            if (ids[i] == gg.e_t2l || ids[i] == gg.e_t1t2) b = 1;
            if (ids[i] == gg.e_t1l || ids[i] == gg.e_t2l || ids[i] == gg.e_t1t2)
                pattern_sum += e.w;
        }
        if (!ok) continue;
        MWSS_REQUIRE(pattern_sum == gg.values.value[a][b] - gg.values.value[0][0],
                     "gadget state value does not match its pattern");
    }
}

} // namespace

RootInstance build_root_instance(const WeightedGraph& basic, const Matching& m,
                                 const Decomposition& dec, bool certify) {
    RootInstance ri;
    int ncliques = static_cast<int>(dec.clique_components.size());
    ri.graph.n = ncliques;
    std::map<Tag, int> root_of;
    for (int i = 0; i < ncliques; ++i)
        for (Tag t : dec.clique_tags[i]) root_of[t] = i;

    auto new_node = [&]() { return ri.graph.n++; };
    auto add_edge = [&](int u, int v, Weight w, std::vector<Tag> payload) {
        int id = ri.graph.add_edge(u, v, w);
        ri.payload.push_back(std::move(payload));
        return id;
    };

    std::set<Tag> consumed;
    Bitset vm = m.covered_set(basic.node_count());

    for (std::size_t si = 0; si < dec.strips.size(); ++si) {
        const StripInstance& strip = dec.strips[si];
        StripValues sv = strip_values(strip);
        if (certify) certify_strip(strip, sv);
        if (sv.boundaries == 0) {
            ri.isolated_witnesses.push_back(sv.witness[0][0]);
            ri.isolated_total += sv.value[0][0];
            continue;
        }
        ri.offset += sv.value[0][0];
        RootInstance::StripGadget gg;
        gg.strip_index = static_cast<int>(si);
        gg.values = sv;
        if (sv.boundaries == 1) {
            int r = root_of.at(strip.boundary[0].partner_resolved);
            gg.t1 = new_node();
            int leaf = new_node();
            gg.e_r1 = add_edge(r, gg.t1, strip.boundary[0].partner_weight,
                               {strip.boundary[0].partner});
            gg.e_t1l = add_edge(gg.t1, leaf, sv.value[1][0] - sv.value[0][0], {});
        } else {
            int r1 = root_of.at(strip.boundary[0].partner_resolved);
            int r2 = root_of.at(strip.boundary[1].partner_resolved);
            gg.t1 = new_node();
            gg.t2 = new_node();
            int leaf = new_node();
            gg.e_r1 = add_edge(r1, gg.t1, strip.boundary[0].partner_weight,
                               {strip.boundary[0].partner});
            gg.e_r2 = add_edge(r2, gg.t2, strip.boundary[1].partner_weight,
                               {strip.boundary[1].partner});
            gg.e_t1l = add_edge(gg.t1, leaf, sv.value[1][0] - sv.value[0][0], {});
            gg.e_t2l = add_edge(gg.t2, leaf, sv.value[0][1] - sv.value[0][0], {});
            gg.e_t1t2 = add_edge(gg.t1, gg.t2, sv.value[1][1] - sv.value[0][0], {});
        }
        if (certify) certify_gadget(ri, gg);
        ri.gadgets.push_back(std::move(gg));
        for (const auto& b : strip.boundary)
            if (basic.has_tag(b.partner)) consumed.insert(b.partner);
    }

    // bridge hubs for matching edges joining two clique components
    for (auto [u, v] : m.edges) {
        Tag tu = basic.tag(u), tv = basic.tag(v);
        auto iu = root_of.find(tu), iv = root_of.find(tv);
        if (iu == root_of.end() || iv == root_of.end()) continue;
        int hub = new_node();
        add_edge(iu->second, hub, basic.weight(u), {tu});
        add_edge(iv->second, hub, basic.weight(v), {tv});
        consumed.insert(tu);
        consumed.insert(tv);
    }

    // plain leaf edges for the remaining clique vertices
    for (int i = 0; i < ncliques; ++i) {
        for (Tag t : dec.clique_tags[i]) {
            if (consumed.count(t)) continue;
            int v = basic.index_of(t);
            if (vm.test(v)) continue;
            int leaf = new_node();
            add_edge(i, leaf, basic.weight(v), {t});
        }
    }

    // isolated components solve directly
    for (const Bitset& c : dec.isolated_components) {
        Bitset none(basic.node_count());
        ComponentSolution sol = solve_exact(basic, c, none, none, Bitset(basic.node_count()));
        ri.isolated_witnesses.push_back(basic.tags_of(sol.set));
        ri.isolated_total += sol.weight;
    }
    return ri;
}

DecodeResult decode(const RootInstance& ri, const MatchingSolution& sol) {
    DecodeResult out;
    std::set<int> selected(sol.edge_ids.begin(), sol.edge_ids.end());
    std::set<int> pattern_edges;
    std::set<Tag> tags;
    auto add_tags = [&](const std::vector<Tag>& ts) {
        for (Tag t : ts) {
            MWSS_REQUIRE(!tags.count(t), "decode produced a duplicate tag");
            tags.insert(t);
        }
    };

    for (const auto& gg : ri.gadgets) {
        int a = 0, b = 0;
        for (int id : {gg.e_t1l, gg.e_t1t2, gg.e_t2l}) {
            if (id == -1) continue;
            pattern_edges.insert(id);
            if (!selected.count(id)) continue;
            if (id == gg.e_t1l || id == gg.e_t1t2) a = 1;
            if (id == gg.e_t2l || id == gg.e_t1t2) b = 1;
        }
        out.patterns.push_back({a, b});
        add_tags(gg.values.witness[a][b]);
    }
    for (int id : sol.edge_ids) {
        if (pattern_edges.count(id)) continue;
        add_tags(ri.payload[id]);
    }
    for (const auto& w : ri.isolated_witnesses) add_tags(w);

    out.weight = sol.weight + ri.offset + ri.isolated_total;
    out.set.assign(tags.begin(), tags.end());
    return out;
}

DecodeResult solve_basic(const WeightedGraph& basic, const Matching& m,
                         const std::vector<SetAsideStrip>& aside,
                         const LiftLedger& ledger, bool certify) {
    Decomposition dec = decompose_basic(basic, m, aside, ledger);
    RootInstance ri = build_root_instance(basic, m, dec, certify);
    MatchingSolution sol = max_weight_matching(ri.graph);
    DecodeResult res = decode(ri, sol);

    Bitset in_basic(basic.node_count());
    Weight total = 0;
    std::map<Tag, Weight> side_weights; // strip interiors + twin-removed partners
    for (const auto& s : dec.strips) {
        for (int v = 0; v < s.sub.node_count(); ++v)
            side_weights[s.sub.tag(v)] = s.sub.weight(v);
        for (const auto& b : s.boundary)
            if (!basic.has_tag(b.partner)) side_weights[b.partner] = b.partner_weight;
    }
    for (Tag t : res.set) {
        if (basic.has_tag(t)) {
            in_basic.set(basic.index_of(t));
            total += basic.weight(basic.index_of(t));
        } else {
            auto it = side_weights.find(t);
            MWSS_REQUIRE(it != side_weights.end(), "decoded tag belongs nowhere");
            total += it->second;
        }
    }
    MWSS_REQUIRE(basic.is_stable(in_basic), "decoded set is not stable in the basic graph");
    MWSS_REQUIRE(total == res.weight, "decoded weight does not add up");
    for (const auto& s : dec.strips)
        for (const auto& b : s.boundary) {
            bool inner_in = std::binary_search(res.set.begin(), res.set.end(), b.inner);
            bool partner_in = std::binary_search(res.set.begin(), res.set.end(), b.partner);
            MWSS_REQUIRE(!(inner_in && partner_in),
                         "strip boundary and its partner both selected");
        }
    if (certify) {
        // realized pattern dominance: never below the all-out pattern
        for (std::size_t i = 0; i < ri.gadgets.size(); ++i) {
            auto [a, b] = res.patterns[i];
            const auto& sv = ri.gadgets[i].values;
            MWSS_REQUIRE(sv.value[a][b] >= sv.value[0][0],
                         "realized strip pattern below the empty pattern");
        }
    }
    return res;
}

std::string render_root_instance(const RootInstance& ri) {
    std::ostringstream out;
    out << "c root matching instance\n";
    out << "p match " << ri.graph.n << " " << ri.graph.edges.size() << "\n";
    for (const auto& e : ri.graph.edges)
        out << "e " << (std::min(e.u, e.v) + 1) << " " << (std::max(e.u, e.v) + 1) << " "
            << e.w << "\n";
    out << "c offset " << ri.offset + ri.isolated_total << "\n";
    return out.str();
}

} // namespace mwss
