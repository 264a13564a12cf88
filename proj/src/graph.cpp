// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/graph.hpp"

#include <algorithm>

namespace mwss {

int WeightedGraph::add_node(Tag tag, Weight w) {
    MWSS_REQUIRE(w >= 0, "node weight must be nonnegative");
    MWSS_REQUIRE(!tag_index_.count(tag), "duplicate node tag " + std::to_string(tag));
    int v = n_++;
    for (auto& a : adj_) a.resize(n_);
    adj_.emplace_back(n_);
    nbr_.emplace_back();
    weight_.push_back(w);
    tag_.push_back(tag);
    tag_index_[tag] = v;
    return v;
}

void WeightedGraph::add_edge(int u, int v) {
    MWSS_REQUIRE(u != v, "self loop");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    nbr_[u].insert(std::lower_bound(nbr_[u].begin(), nbr_[u].end(), v), v);
    nbr_[v].insert(std::lower_bound(nbr_[v].begin(), nbr_[v].end(), u), u);
}

void WeightedGraph::remove_edge(int u, int v) {
    if (!adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    nbr_[u].erase(std::lower_bound(nbr_[u].begin(), nbr_[u].end(), v));
    nbr_[v].erase(std::lower_bound(nbr_[v].begin(), nbr_[v].end(), u));
}

Weight WeightedGraph::max_weight() const {
    Weight m = 0;
    for (Weight w : weight_) m = std::max(m, w);
    return m;
}

int WeightedGraph::index_of(Tag t) const {
    auto it = tag_index_.find(t);
    MWSS_REQUIRE(it != tag_index_.end(), "unknown node tag " + std::to_string(t));
    return it->second;
}

Bitset WeightedGraph::full_set() const {
    Bitset b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
}

Bitset WeightedGraph::closed_nh(int v) const {
    Bitset b = adj_[v];
    b.resize(n_);
    b.set(v);
    return b;
}

Bitset WeightedGraph::open_nh(const Bitset& s) const {
    Bitset out(n_);
    s.for_each([&](int v) { out |= adj_[v]; });
    out -= s;
    return out;
}

bool WeightedGraph::is_clique(const Bitset& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        Bitset rest = s;
        rest.reset(v);
        if (!rest.subset_of(adj_[v])) ok = false;
    });
    return ok;
}

bool WeightedGraph::is_stable(const Bitset& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && adj_[v].intersects(s)) ok = false;
    });
    return ok;
}

bool WeightedGraph::is_maximal_clique(const Bitset& s) const {
    if (!is_clique(s)) return false;
    for (int v = 0; v < n_; ++v) {
        if (s.test(v)) continue;
        if (s.subset_of(adj_[v])) return false;
    }
    return true;
}

Weight WeightedGraph::set_weight_sum(const Bitset& s) const {
    Weight w = 0;
    s.for_each([&](int v) { w += weight_[v]; });
    return w;
}

WeightedGraph WeightedGraph::induced(const Bitset& keep) const {
    WeightedGraph out;
    std::vector<int> old_of;
    std::vector<int> new_of(n_, -1);
    keep.for_each([&](int v) {
        new_of[v] = out.add_node(tag_[v], weight_[v]);
        old_of.push_back(v);
    });
    for (int nv = 0; nv < static_cast<int>(old_of.size()); ++nv) {
        int v = old_of[nv];
        for (int u : nbr_[v]) {
            if (u < v && keep.test(u)) out.add_edge(new_of[u], nv);
        }
    }
    return out;
}

std::vector<Bitset> WeightedGraph::components() const {
    return components_without({});
}

std::vector<Bitset> WeightedGraph::components_without(
    const std::vector<std::pair<int, int>>& skip_edges) const {
    std::vector<int> parent(n_);
    for (int i = 0; i < n_; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    Bitset skip_mark(n_ * 0 + 1); // placeholder to silence unused warnings on empty graphs
    (void)skip_mark;
    std::vector<std::vector<int>> skip(n_);
    for (auto [u, v] : skip_edges) {
        skip[u].push_back(v);
        skip[v].push_back(u);
    }
    for (auto& s : skip) std::sort(s.begin(), s.end());
    for (int v = 0; v < n_; ++v) {
        for (int u : nbr_[v]) {
            if (u >= v) break;
            if (std::binary_search(skip[v].begin(), skip[v].end(), u)) continue;
            unite(u, v);
        }
    }
    std::map<int, int> comp_id;
    std::vector<Bitset> comps;
    for (int v = 0; v < n_; ++v) {
        int r = find(v);
        auto it = comp_id.find(r);
        if (it == comp_id.end()) {
            comp_id[r] = static_cast<int>(comps.size());
            comps.emplace_back(n_);
            it = comp_id.find(r);
        }
        comps[it->second].set(v);
    }
    return comps;
}

std::vector<Tag> WeightedGraph::tags_of(const Bitset& s) const {
    std::vector<Tag> out;
    s.for_each([&](int v) { out.push_back(tag_[v]); });
    std::sort(out.begin(), out.end());
    return out;
}

Bitset WeightedGraph::set_of_tags(const std::vector<Tag>& tags) const {
    Bitset b(n_);
    for (Tag t : tags) b.set(index_of(t));
    return b;
}

// ---------------------------------------------------------------------------
// detectors

std::optional<ClawWitness> find_claw_in(const WeightedGraph& g, const Bitset& nodes) {
    std::optional<ClawWitness> res;
    for (int w = nodes.next(0); w != -1 && !res; w = nodes.next(w + 1)) {
        Bitset nh = g.adj(w) & nodes;
        std::vector<int> nb = nh.to_vector();
        for (std::size_t i = 0; i < nb.size() && !res; ++i) {
            for (std::size_t j = i + 1; j < nb.size() && !res; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        res = ClawWitness{w, {nb[i], nb[j], nb[k]}};
                        break;
                    }
                }
            }
        }
    }
    return res;
}

std::optional<ClawWitness> find_claw(const WeightedGraph& g) {
    return find_claw_in(g, g.full_set());
}

std::optional<ClawWitness> find_claw_near(const WeightedGraph& g, const Bitset& touch) {
    Bitset centers = touch;
    centers.resize(g.node_count());
    centers |= g.open_nh(touch);
    std::optional<ClawWitness> res;
    Bitset all = g.full_set();
    for (int w = centers.next(0); w != -1 && !res; w = centers.next(w + 1)) {
        Bitset nh = g.adj(w);
        std::vector<int> nb = nh.to_vector();
        for (std::size_t i = 0; i < nb.size() && !res; ++i) {
            for (std::size_t j = i + 1; j < nb.size() && !res; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        res = ClawWitness{w, {nb[i], nb[j], nb[k]}};
                        break;
                    }
                }
            }
        }
    }
    (void)all;
    return res;
}

std::optional<NetWitness> find_net_in(const WeightedGraph& g, const Bitset& nodes) {
    // triangles by ascending (x, y, z), then one pendant per corner,
    // pendants mutually non-adjacent
    std::vector<int> nv = nodes.to_vector();
    for (int x : nv) {
        for (int y : g.neighbors(x)) {
            if (y <= x || !nodes.test(y)) continue;
            Bitset common = g.adj(x) & g.adj(y) & nodes;
            for (int z = common.next(y + 1); z != -1; z = common.next(z + 1)) {
                // pendant candidate sets per corner
                Bitset tri(g.node_count());
                tri.set(x); tri.set(y); tri.set(z);
                Bitset px = (g.adj(x) & nodes) - g.adj(y);
                px -= g.adj(z); px -= tri;
                if (px.none()) continue;
                Bitset py = (g.adj(y) & nodes) - g.adj(x);
                py -= g.adj(z); py -= tri;
                if (py.none()) continue;
                Bitset pz = (g.adj(z) & nodes) - g.adj(x);
                pz -= g.adj(y); pz -= tri;
                if (pz.none()) continue;
                for (int a = px.next(0); a != -1; a = px.next(a + 1)) {
                    Bitset pyb = py - g.adj(a);
                    for (int b = pyb.next(0); b != -1; b = pyb.next(b + 1)) {
                        Bitset pzb = (pz - g.adj(a)) - g.adj(b);
                        int c = pzb.next(0);
                        if (c != -1) {
                            return NetWitness{{x, y, z}, {a, b, c}};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<NetWitness> find_net(const WeightedGraph& g) {
    return find_net_in(g, g.full_set());
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
regular_cover(const WeightedGraph& g, int v) {
    // 2-color the complement of G[N(v)]: color classes are cliques of G
    std::vector<int> nb = g.neighbors(v);
    int m = static_cast<int>(nb.size());
    std::vector<int> color(m, -1);
    std::vector<int> stack;
    for (int s = 0; s < m; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < m; ++b) {
                if (b == a || g.adjacent(nb[a], nb[b])) continue; // complement edge iff non-adjacent
                if (color[b] == -1) {
                    color[b] = 1 - color[a];
                    stack.push_back(b);
                } else if (color[b] == color[a]) {
                    return std::nullopt; // odd cycle in the complement
                }
            }
        }
    }
    std::vector<int> k1, k2;
    for (int i = 0; i < m; ++i) (color[i] == 0 ? k1 : k2).push_back(nb[i]);
    return std::make_pair(k1, k2);
}

bool is_regular(const WeightedGraph& g, int v) {
    return regular_cover(g, v).has_value();
}

namespace {

// induced C5 in G[nh] containing nothing outside nh
bool has_induced_c5(const WeightedGraph& g, const Bitset& nh) {
    std::vector<int> nodes = nh.to_vector();
    for (int a : nodes) {
        Bitset na = g.adj(a) & nh;
        for (int b = na.next(a + 1); b != -1; b = na.next(b + 1)) {
            // path a-b; extend b-c with c not adjacent a, c > a to cut symmetry
            Bitset cset = (g.adj(b) & nh) - g.adj(a);
            for (int c = cset.next(a + 1); c != -1; c = cset.next(c + 1)) {
                if (c == b) continue;
                Bitset dset = (g.adj(c) & nh) - g.adj(a);
                dset -= g.adj(b);
                for (int d = dset.next(a + 1); d != -1; d = dset.next(d + 1)) {
                    // e closes the cycle: adjacent to d and a, not b, c
                    Bitset eset = (g.adj(d) & g.adj(a)) & nh;
                    eset -= g.adj(b);
                    eset -= g.adj(c);
                    if (eset.next(0) != -1) return true;
                }
            }
        }
    }
    return false;
}

} // namespace

bool has_five_wheel_hub_in(const WeightedGraph& g, const Bitset& hubs) {
    for (int v = hubs.next(0); v != -1; v = hubs.next(v + 1)) {
        Bitset nh = g.adj(v);
        if (nh.count() < 5) continue;
        if (has_induced_c5(g, nh)) return true;
    }
    return false;
}

bool has_five_wheel(const WeightedGraph& g) {
    return has_five_wheel_hub_in(g, g.full_set());
}

namespace {

bool find_independent(const WeightedGraph& g, const Bitset& cand, int need) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    Bitset rest = cand;
    for (int v = rest.next(0); v != -1; v = rest.next(v + 1)) {
        Bitset nxt = rest - g.adj(v);
        nxt.reset(v);
        if (find_independent(g, nxt, need - 1)) return true;
        rest.reset(v); // v excluded from any remaining choice
        if (rest.count() < need) return false;
    }
    return false;
}

} // namespace

bool alpha_at_most(const WeightedGraph& g, const Bitset& nodes, int k) {
    MWSS_REQUIRE(k <= 4, "alpha_at_most supports k <= 4");
    return !find_independent(g, nodes, k + 1);
}

std::pair<WeightedGraph, TwinLedger> remove_twins(const WeightedGraph& g,
                                                  bool adjacent_only) {
    WeightedGraph cur = g;
    TwinLedger ledger;
    bool changed = true;
    while (changed) {
        changed = false;
        int n = cur.node_count();
        int found_u = -1, found_v = -1;
        for (int u = 0; u < n && found_u == -1; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (cur.degree(u) != cur.degree(v)) continue;
                if (adjacent_only && !cur.adjacent(u, v)) continue;
                Bitset nu = cur.adj(u); nu.reset(v);
                Bitset nv = cur.adj(v); nv.reset(u);
                if (nu == nv) { found_u = u; found_v = v; break; }
            }
        }
        if (found_u == -1) break;
        int u = found_u, v = found_v;
        bool adj = cur.adjacent(u, v);
        int keep, drop;
        if (adj) {
            // keep the max-weight twin; ties keep the smaller tag
            if (cur.weight(u) > cur.weight(v) ||
                (cur.weight(u) == cur.weight(v) && cur.tag(u) < cur.tag(v))) {
                keep = u; drop = v;
            } else {
                keep = v; drop = u;
            }
        } else {
            keep = cur.tag(u) < cur.tag(v) ? u : v;
            drop = keep == u ? v : u;
        }
        ledger.push_back({cur.tag(keep), cur.tag(drop), adj, cur.weight(drop)});
        Weight merged = adj ? cur.weight(keep) : cur.weight(keep) + cur.weight(drop);
        Bitset keep_set = cur.full_set();
        keep_set.reset(drop);
        int keep_tagidx = keep; // index shifts after induced(); re-find by tag
        Tag keep_tag = cur.tag(keep_tagidx);
        cur = cur.induced(keep_set);
        cur.set_weight(cur.index_of(keep_tag), merged);
        changed = true;
    }
    return {std::move(cur), std::move(ledger)};
}

std::vector<Tag> reinsert_twins(const WeightedGraph& reduced,
                                const std::vector<Tag>& stable_tags,
                                const TwinLedger& ledger) {
    // validate stability on the reduced graph first
    Bitset s = reduced.set_of_tags(stable_tags);
    MWSS_REQUIRE(reduced.is_stable(s), "reinsert_twins: input set is not stable in the reduced graph");
    std::vector<Tag> out = stable_tags;
    for (auto it = ledger.rbegin(); it != ledger.rend(); ++it) {
        bool has_kept = std::find(out.begin(), out.end(), it->kept) != out.end();
        if (!it->adjacent && has_kept) {
            out.push_back(it->removed); // merged pair expands to both originals
        }
        // adjacent twins: the kept representative stands for itself
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mwss
