// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWSS_IO_HPP
#define MWSS_IO_HPP

#include <iosfwd>
#include <string>

#include "mwss/graph.hpp"

namespace mwss {

// Instance text format:
//   c <comment>
//   p mwss <n> <m>
//   v <id> <weight>        ids 1..n; missing lines default to weight 1
//   e <u> <v>              u < v, no duplicates
// parse(render(g)) == g; render emits a canonical ordering so round trips
// are byte-identical.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

WeightedGraph parse_instance(std::istream& in);
WeightedGraph parse_instance_string(const std::string& text);
WeightedGraph load_instance(const std::string& path);

// Same structure with tags renumbered to 1..n in index order; generators
// that delete nodes go through this before rendering.
WeightedGraph renumbered(const WeightedGraph& g);

std::string render_instance(const WeightedGraph& g);
void save_instance(const WeightedGraph& g, const std::string& path);

// Guard against weight overflow along the lifting pipeline:
// n * (w_max + 4n) must stay below 2^62.
void check_weight_guard(const WeightedGraph& g);

} // namespace mwss

#endif
