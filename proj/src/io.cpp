// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include "mwss/io.hpp"

#include <fstream>
#include <sstream>

namespace mwss {

WeightedGraph parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Weight> weights;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> weight_seen;
    std::vector<std::vector<int>> seen_edges;
    long long edge_count = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            std::string fmt;
            ls >> fmt >> n >> m;
            if (!ls || fmt != "mwss" || n < 0 || m < 0)
                throw parse_error(lineno, "bad header, expected 'p mwss <n> <m>'");
            weights.assign(n, 1);
            weight_seen.assign(n, 0);
            seen_edges.assign(n, {});
        } else if (kind == "v") {
            if (n < 0) throw parse_error(lineno, "'v' before header");
            long long id, w;
            ls >> id >> w;
            if (!ls) throw parse_error(lineno, "bad weight line");
            if (id < 1 || id > n) throw parse_error(lineno, "node id out of range");
            if (w < 0) throw parse_error(lineno, "negative weight");
            if (weight_seen[id - 1]) throw parse_error(lineno, "duplicate weight line");
            weight_seen[id - 1] = 1;
            weights[id - 1] = w;
        } else if (kind == "e") {
            if (n < 0) throw parse_error(lineno, "'e' before header");
            long long u, v;
            ls >> u >> v;
            if (!ls) throw parse_error(lineno, "bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw parse_error(lineno, "node id out of range");
            if (u >= v) throw parse_error(lineno, "edges must satisfy u < v");
            auto& s = seen_edges[u - 1];
            for (int x : s)
                if (x == v) throw parse_error(lineno, "duplicate edge");
            s.push_back(static_cast<int>(v));
            edges.push_back({static_cast<int>(u), static_cast<int>(v)});
            ++edge_count;
        } else {
            throw parse_error(lineno, "unknown line kind '" + kind + "'");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing header");
    if (edge_count != m) throw parse_error(lineno, "edge count does not match header");

    WeightedGraph g;
    for (long long i = 1; i <= n; ++i) g.add_node(i, weights[i - 1]);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

WeightedGraph parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

WeightedGraph load_instance(const std::string& path) {
    std::ifstream in(path);
    MWSS_REQUIRE(in.good(), "cannot open " + path);
    return parse_instance(in);
}

WeightedGraph renumbered(const WeightedGraph& g) {
    WeightedGraph out;
    for (int v = 0; v < g.node_count(); ++v) out.add_node(v + 1, g.weight(v));
    for (int v = 0; v < g.node_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) out.add_edge(v, u);
    return out;
}

std::string render_instance(const WeightedGraph& g) {
    std::ostringstream out;
    int n = g.node_count();
    for (int v = 0; v < n; ++v)
        MWSS_REQUIRE(g.tag(v) == v + 1, "render_instance requires tags 1..n; renumber first");
    long long m = 0;
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) ++m;
    out << "p mwss " << n << " " << m << "\n";
    for (int v = 0; v < n; ++v)
        out << "v " << g.tag(v) << " " << g.weight(v) << "\n";
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) out << "e " << g.tag(v) << " " << g.tag(u) << "\n";
    return out.str();
}

void save_instance(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    MWSS_REQUIRE(out.good(), "cannot write " + path);
    out << render_instance(g);
}

void check_weight_guard(const WeightedGraph& g) {
    long long n = g.node_count();
    if (n == 0) return;
    Weight wmax = g.max_weight();
    // conservative: the pipeline adds at most ~4n lifting rounds of +1
    long long budget = (1LL << 62);
    MWSS_REQUIRE(n <= 100000000 && wmax <= budget / (4 * n + 4) - 4 * n,
                 "instance too large for 64-bit weight accounting");
}

} // namespace mwss
