// Copyright (c) 2026 the mwss authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mwss/io.hpp"
#include "mwss/oracle.hpp"
#include "mwss/solver.hpp"

using namespace mwss;

namespace {

GenKind parse_model(const std::string& name) {
    if (name == "line") return GenKind::LineGraph;
    if (name == "circ" || name == "circular") return GenKind::CircularInterval;
    if (name == "mixed") return GenKind::MixedClawFree;
    throw CLI::ValidationError("--model", "expected line, circ or mixed");
}

int run_solve(const std::string& path, bool certify, const std::string& dot_path,
              bool stats) {
    WeightedGraph g = load_instance(path);
    SolveOptions opts;
    opts.certify = certify;
    try {
        SolveReport rep = solve_mwss(g, opts, !dot_path.empty());
        std::cout << "weight " << rep.weight << "\n";
        std::cout << "set";
        for (Tag t : rep.set) std::cout << " " << t;
        std::cout << "\n";
        if (stats) {
            std::cout << "stats components=" << rep.components
                      << " strips=" << rep.strips
                      << " lifts_soft=" << rep.stats.lifts_soft
                      << " lifts_free=" << rep.stats.lifts_free
                      << " lifts_s=" << rep.stats.lifts_s
                      << " node_growth="
                      << (rep.stats.original_nodes
                              ? static_cast<double>(rep.stats.final_nodes) /
                                    rep.stats.original_nodes
                              : 1.0)
                      << "\n";
        }
        if (certify)
            std::cout << "certify oracle: " << (rep.oracle_checked ? "match" : "out of reach")
                      << "\n";
        if (!dot_path.empty()) {
            std::ofstream out(dot_path);
            out << rep.dot;
        }
        return 0;
    } catch (const thrown_claw& e) {
        std::cout << "not claw-free: claw (" << g.tag(e.witness.center) << ": "
                  << g.tag(e.witness.leaves[0]) << ", " << g.tag(e.witness.leaves[1]) << ", "
                  << g.tag(e.witness.leaves[2]) << ")\n";
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum weight stable set solver for claw-free graphs"};
    app.require_subcommand(1);

    std::string in_path, dot_path;
    bool certify = false, stats = false;
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("input", in_path)->required();
    solve->add_flag("--certify", certify, "run all shadow checks and the oracle comparison");
    solve->add_flag("--stats", stats, "print phase statistics");
    solve->add_option("--dot", dot_path, "write the decomposition as DOT");

    std::string model_name = "line", out_path;
    int gen_n = 20;
    long long wmin = 1, wmax = 100;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a claw-free instance");
    gen->add_option("--model", model_name, "line | circ | mixed");
    gen->add_option("--n", gen_n, "target node count");
    gen->add_option("--seed", seed);
    gen->add_option("--wmin", wmin);
    gen->add_option("--wmax", wmax);
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string oracle_path;
    auto* oracle = app.add_subcommand("oracle", "brute-force weight of a small instance");
    oracle->add_option("input", oracle_path)->required();

    std::string dec_path, dec_dot;
    auto* dec = app.add_subcommand("decompose", "run the pipeline and dump the structure");
    dec->add_option("input", dec_path)->required();
    dec->add_option("--dot", dec_dot, "DOT output file (default stdout)");

    std::string bench_sizes = "200,400,800", bench_model = "line";
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "timing sweep, CSV on stdout");
    bench->add_option("--sizes", bench_sizes, "comma-separated node counts");
    bench->add_option("--model", bench_model);
    bench->add_option("--seed", bench_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(in_path, certify, dot_path, stats);

        if (*gen) {
            GenModel model{parse_model(model_name), gen_n, wmin, wmax, seed};
            WeightedGraph g = renumbered(gen_instance(model));
            std::string text = render_instance(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
            }
            return 0;
        }

        if (*oracle) {
            WeightedGraph g = load_instance(oracle_path);
            std::cout << brute_mwss(g).weight << "\n";
            return 0;
        }

        if (*dec) {
            WeightedGraph g = load_instance(dec_path);
            SolveOptions opts;
            SolveReport rep = solve_mwss(g, opts, true);
            if (dec_dot.empty()) {
                std::cout << rep.dot;
            } else {
                std::ofstream out(dec_dot);
                out << rep.dot;
            }
            return 0;
        }

        if (*bench) {
            GenKind kind = parse_model(bench_model);
            std::cout << "model,n,seed,ms,node_growth,phase_lifts_soft,phase_lifts_free,"
                         "phase_lifts_s\n";
            std::stringstream sizes(bench_sizes);
            std::string tok;
            while (std::getline(sizes, tok, ',')) {
                int n = std::stoi(tok);
                GenModel model{kind, n, 1, 100, bench_seed};
                WeightedGraph g = gen_instance(model);
                SolveOptions opts;
                auto t0 = std::chrono::steady_clock::now();
                SolveReport rep = solve_mwss(g, opts);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                double growth = rep.stats.original_nodes
                                    ? static_cast<double>(rep.stats.final_nodes) /
                                          rep.stats.original_nodes
                                    : 1.0;
                std::cout << bench_model << "," << n << "," << bench_seed << "," << ms << ","
                          << growth << "," << rep.stats.lifts_soft << ","
                          << rep.stats.lifts_free << "," << rep.stats.lifts_s << "\n";
            }
            return 0;
        }
    } catch (const thrown_claw&) {
        std::cerr << "input graph contains a claw\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
