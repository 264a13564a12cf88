// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/blossom.hpp"

#include <algorithm>
#include <map>

namespace mwss {

namespace {

// Primal-dual maximum weight matching with blossom shrinking, the classic
// O(V^3) formulation over edge endpoints (endpoint p encodes edge p/2, side
// p%2). Weights are doubled internally so all duals stay integral.
class BlossomSolver {
public:
    BlossomSolver(int n, const std::vector<MatchingInstance::Edge>& edges)
        : nvertex(n), nedge(static_cast<int>(edges.size())) {
        ed.reserve(nedge);
        Weight maxw = 0;
        for (const auto& e : edges) {
            ed.push_back({e.u, e.v, 2 * e.w});
            maxw = std::max(maxw, 2 * e.w);
        }
        endpoint.resize(2 * nedge);
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; ++k) {
            endpoint[2 * k] = ed[k].u;
            endpoint[2 * k + 1] = ed[k].v;
            neighbend[ed[k].u].push_back(2 * k + 1);
            neighbend[ed[k].v].push_back(2 * k);
        }
        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; ++v) inblossom[v] = v;
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.resize(2 * nvertex);
        for (int v = 0; v < nvertex; ++v) blossombase[v] = v;
        for (int b = nvertex; b < 2 * nvertex; ++b) blossombase[b] = -1;
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, {});
        has_best_list.assign(2 * nvertex, false);
        unusedblossoms.clear();
        for (int b = 2 * nvertex - 1; b >= nvertex; --b) unusedblossoms.push_back(b);
        dualvar.assign(2 * nvertex, 0);
        for (int v = 0; v < nvertex; ++v) dualvar[v] = maxw;
        allowedge.assign(nedge, false);
    }

    std::vector<int> solve() {
        if (nvertex == 0) return {};
        for (int t = 0; t < nvertex; ++t) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            for (int b = nvertex; b < 2 * nvertex; ++b) {
                blossombestedges[b].clear();
                has_best_list[b] = false;
            }
            std::fill(allowedge.begin(), allowedge.end(), false);
            queue.clear();
            for (int v = 0; v < nvertex; ++v)
                if (mate[v] == -1 && label[inblossom[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            for (;;) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    for (int p : neighbend[v]) {
                        int k = p / 2;
                        int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) continue;
                        Weight kslack = 0;
                        if (!allowedge[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge[k] = true;
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        } else if (label[inblossom[w]] == 1) {
                            int b = inblossom[v];
                            if (bestedge[b] == -1 || kslack < slack(bestedge[b])) bestedge[b] = k;
                        } else if (label[w] == 0) {
                            if (bestedge[w] == -1 || kslack < slack(bestedge[w])) bestedge[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = 1;
                Weight delta = 0;
                int deltaedge = -1, deltablossom = -1;
                for (int v = 0; v < nvertex; ++v)
                    if (v == 0 || dualvar[v] < delta) delta = dualvar[v];
                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                        Weight d = slack(bestedge[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; ++b) {
                    if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                        Weight ks = slack(bestedge[b]);
                        Weight d = ks / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == 2 &&
                        dualvar[b] < delta) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 1)
                        dualvar[v] -= delta;
                    else if (label[inblossom[v]] == 2)
                        dualvar[v] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                        if (label[b] == 1)
                            dualvar[b] += delta;
                        else if (label[b] == 2)
                            dualvar[b] -= delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge[deltaedge] = true;
                    int i = ed[deltaedge].u;
                    if (label[inblossom[i]] == 0) i = ed[deltaedge].v;
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = true;
                    queue.push_back(ed[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nvertex; b < 2 * nvertex; ++b) {
                if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 2 &&
                    dualvar[b] == 0)
                    expand_blossom(b, true);
            }
        }
        std::vector<int> out(nvertex, -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0) out[v] = endpoint[mate[v]];
        return out;
    }

private:
    struct E {
        int u, v;
        Weight w;
    };

    Weight slack(int k) const { return dualvar[ed[k].u] + dualvar[ed[k].v] - 2 * ed[k].w; }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds[b]) blossom_leaves(t, out);
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[w];
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int x : leaves) queue.push_back(x);
        } else {
            int base = blossombase[b];
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            path.push_back(b);
            label[b] = 5;
            if (labelend[b] == -1) {
                v = -1;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                v = endpoint[labelend[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = ed[k].u, w = ed[k].v;
        int bb = inblossom[base], bv = inblossom[v], bw = inblossom[w];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        blossomchilds[b] = path;
        blossomendps[b] = endps;
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int x : leaves) {
            if (label[inblossom[x]] == 2) queue.push_back(x);
            inblossom[x] = b;
        }
        // combine best-edge lists of the sub-blossoms
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (int bv2 : path) {
            std::vector<std::vector<int>> nblists;
            if (!has_best_list[bv2] || bv2 < nvertex) {
                std::vector<int> lv;
                blossom_leaves(bv2, lv);
                for (int x : lv) {
                    std::vector<int> ks;
                    for (int p : neighbend[x]) ks.push_back(p / 2);
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(blossombestedges[bv2]);
            }
            for (const auto& nblist : nblists) {
                for (int k2 : nblist) {
                    int i = ed[k2].u, j = ed[k2].v;
                    if (inblossom[j] == b) std::swap(i, j);
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(k2) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = k2;
                }
            }
            if (bv2 >= nvertex) {
                blossombestedges[bv2].clear();
                has_best_list[bv2] = false;
            }
            bestedge[bv2] = -1;
        }
        blossombestedges[b].clear();
        for (int k2 : bestedgeto)
            if (k2 != -1) blossombestedges[b].push_back(k2);
        has_best_list[b] = true;
        bestedge[b] = -1;
        for (int k2 : blossombestedges[b])
            if (bestedge[b] == -1 || slack(k2) < slack(bestedge[b])) bestedge[b] = k2;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) inblossom[v] = s;
            }
        }
        if (!endstage && label[b] == 2) {
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            int j = 0;
            for (std::size_t i = 0; i < blossomchilds[b].size(); ++i)
                if (blossomchilds[b][i] == entrychild) j = static_cast<int>(i);
            int jstep, endptrick;
            int len = static_cast<int>(blossomchilds[b].size());
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            auto child = [&](int idx) { return blossomchilds[b][(idx % len + len) % len]; };
            auto endp = [&](int idx) { return blossomendps[b][(idx % len + len) % len]; };
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[endp(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[endp(j - endptrick) / 2] = true;
                j += jstep;
                p = endp(j - endptrick) ^ endptrick;
                allowedge[p / 2] = true;
                j += jstep;
            }
            // relabel the base sub-blossom in place: its tree parent is the
            // cycle edge we just walked, so no stepping through its mate
            int bv = child(j);
            label[endpoint[p ^ 1]] = 2;
            label[bv] = 2;
            labelend[endpoint[p ^ 1]] = p;
            labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (child(j) != entrychild) {
                int bv2 = child(j);
                if (label[bv2] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv2, leaves);
                int marked = -1;
                for (int v : leaves)
                    if (label[v] != 0) { marked = v; break; }
                if (marked != -1) {
                    label[marked] = 0;
                    label[endpoint[mate[blossombase[bv2]]]] = 0;
                    assign_label(marked, 2, labelend[marked]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b].clear();
        has_best_list[b] = false;
        unusedblossoms.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) t = blossomparent[t];
        if (t >= nvertex) augment_blossom(t, v);
        int len = static_cast<int>(blossomchilds[b].size());
        int i = 0;
        for (std::size_t x = 0; x < blossomchilds[b].size(); ++x)
            if (blossomchilds[b][x] == t) i = static_cast<int>(x);
        int j = i, jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        auto child = [&](int idx) { return blossomchilds[b][(idx % len + len) % len]; };
        auto endp = [&](int idx) { return blossomendps[b][(idx % len + len) % len]; };
        while (j != 0) {
            j += jstep;
            int t2 = child(j);
            int p = endp(j - endptrick) ^ endptrick;
            if (t2 >= nvertex) augment_blossom(t2, endpoint[p]);
            j += jstep;
            t2 = child(j);
            if (t2 >= nvertex) augment_blossom(t2, endpoint[p ^ 1]);
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::vector<int> nc, ne;
        for (int x = 0; x < len; ++x) nc.push_back(blossomchilds[b][(i + x) % len]);
        for (int x = 0; x < len; ++x) ne.push_back(blossomendps[b][(i + x) % len]);
        blossomchilds[b] = std::move(nc);
        blossomendps[b] = std::move(ne);
        blossombase[b] = blossombase[blossomchilds[b][0]];
    }

    void augment_matching(int k) {
        for (int side = 0; side < 2; ++side) {
            int s = side == 0 ? ed[k].u : ed[k].v;
            int p = side == 0 ? 2 * k + 1 : 2 * k;
            for (;;) {
                int bs = inblossom[s];
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[s] = p;
                if (labelend[bs] == -1) break;
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                s = endpoint[labelend[bt]];
                int j = endpoint[labelend[bt] ^ 1];
                if (bt >= nvertex) augment_blossom(bt, j);
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    int nvertex, nedge;
    std::vector<E> ed;
    std::vector<int> endpoint;
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate, label, labelend, inblossom, blossomparent, blossombase, bestedge;
    std::vector<std::vector<int>> blossomchilds, blossomendps, blossombestedges;
    std::vector<char> has_best_list;
    std::vector<int> unusedblossoms;
    std::vector<Weight> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;
};

} // namespace

MatchingSolution max_weight_matching(const MatchingInstance& instance) {
    // collapse parallel edges to the heaviest (smallest id on ties), drop
    // negatives (never part of a maximum matching)
    std::map<std::pair<int, int>, int> best;
    for (int id = 0; id < static_cast<int>(instance.edges.size()); ++id) {
        const auto& e = instance.edges[id];
        MWSS_REQUIRE(e.u != e.v, "matching instance has a self loop");
        MWSS_REQUIRE(0 <= e.u && e.u < instance.n && 0 <= e.v && e.v < instance.n,
                     "matching edge endpoint out of range");
        if (e.w < 0) continue;
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        auto it = best.find(key);
        if (it == best.end() || instance.edges[it->second].w < e.w) best[key] = id;
    }
    std::vector<MatchingInstance::Edge> edges;
    std::vector<int> orig_id;
    for (const auto& [key, id] : best) {
        edges.push_back({key.first, key.second, instance.edges[id].w});
        orig_id.push_back(id);
    }

    BlossomSolver solver(instance.n, edges);
    std::vector<int> mate = solver.solve();

    MatchingSolution sol;
    sol.mate = mate;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mate[edges[k].u] == edges[k].v) {
            // zero-weight matched edges are dropped from the reported set
            if (edges[k].w > 0) {
                sol.edge_ids.push_back(orig_id[k]);
                sol.weight += edges[k].w;
            } else {
                sol.mate[edges[k].u] = -1;
                sol.mate[edges[k].v] = -1;
            }
        }
    }
    std::sort(sol.edge_ids.begin(), sol.edge_ids.end());
    return sol;
}

} // namespace mwss
