/*
 * Copyright 2026 The mumorank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <mumorank/bounds.hpp>
#include <mumorank/config.hpp>
#include <mumorank/csv.hpp>
#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/json_writer.hpp>
#include <mumorank/solver.hpp>
#include <mumorank/walker.hpp>

namespace mumorank {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return std::move(buffer).str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

namespace detail {

inline JsonValue config_echo(const RunConfig& config) {
    JsonValue echo = JsonValue::object();
    JsonValue damping = JsonValue::object();
    for (const auto& [name, zeta] : config.damping) damping[name] = zeta;
    echo["damping"] = std::move(damping);
    JsonValue preferred = JsonValue::object();
    for (const auto& [name, labels] : config.preferred) {
        JsonValue list = JsonValue::array();
        for (const auto& label : labels) list.push_back(label);
        preferred[name] = std::move(list);
    }
    echo["preferred"] = std::move(preferred);
    echo["preference_mode"] =
        config.preference_mode == PreferenceMode::uniform ? "uniform" : "hub_preferring";
    if (!config.nodes.empty()) {
        JsonValue roster = JsonValue::object();
        for (const auto& [name, labels] : config.nodes) {
            JsonValue list = JsonValue::array();
            for (const auto& label : labels) list.push_back(label);
            roster[name] = std::move(list);
        }
        echo["nodes"] = std::move(roster);
    }
    JsonValue solver = JsonValue::object();
    solver["max_iterations"] = static_cast<std::uint64_t>(config.solver.max_iterations);
    solver["tolerance"] = config.solver.tolerance;
    echo["solver"] = std::move(solver);
    return echo;
}

inline JsonValue graph_summary(const MultimodalHypergraph& graph) {
    JsonValue summary = JsonValue::object();
    summary["hyperedges"] = graph.hyperedge_count();
    JsonValue modalities = JsonValue::array();
    for (const auto& name : graph.schema().names) modalities.push_back(name);
    summary["modalities"] = std::move(modalities);
    JsonValue counts = JsonValue::object();
    std::size_t zero_degree = 0;
    for (std::size_t i = 0; i < graph.modality_count(); ++i) {
        counts[graph.schema().names[i]] = graph.node_count(i);
        for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
            if (graph.degree(i, j) == 0) ++zero_degree;
    }
    summary["node_counts"] = std::move(counts);
    summary["zero_degree_nodes"] = zero_degree;
    return summary;
}

inline JsonValue per_node_map(const MultimodalHypergraph& graph, const ModalityVectors& values) {
    JsonValue map = JsonValue::object();
    for (std::size_t i = 0; i < graph.modality_count(); ++i) {
        JsonValue block = JsonValue::object();
        for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
            block[graph.label(i, j)] = values[i][j];
        map[graph.schema().names[i]] = std::move(block);
    }
    return map;
}

inline JsonValue per_modality_map(const MultimodalHypergraph& graph,
                                  const std::vector<double>& values) {
    JsonValue map = JsonValue::object();
    for (std::size_t i = 0; i < graph.modality_count(); ++i)
        map[graph.schema().names[i]] = values[i];
    return map;
}

struct LoadedProblem {
    MultimodalHypergraph graph;
    RunConfig config;
    BoundConfig bound;
};

inline LoadedProblem load_problem(const std::string& graph_path, const std::string& config_path,
                                  bool allow_multi) {
    if (config_path.empty()) throw SchemaError("this command requires a config file");
    RunConfig config = parse_config(read_file(config_path));
    const HyperedgeTable table = parse_hyperedge_csv(read_file(graph_path));
    MultimodalHypergraph graph{build_hypergraph(table, config.nodes, allow_multi)};
    BoundConfig bound = bind_config(config, graph);
    return LoadedProblem{std::move(graph), std::move(config), std::move(bound)};
}

inline JsonValue bound_entry(const MultimodalHypergraph& graph, const BoundReport& report) {
    JsonValue entry = JsonValue::object();
    entry["bound"] = report.bound;
    entry["observed"] = report.observed;
    entry["holds"] = report.holds;
    if (report.d_sat) entry["d_sat"] = *report.d_sat;
    if (report.d0_sat) entry["d0_sat"] = *report.d0_sat;
    if (!report.d_modality.empty())
        entry["d_modality"] = per_modality_map(graph, report.d_modality);
    return entry;
}

} // namespace detail

/**
 * Checks a hyperedge CSV (plus optional roster from the config) and
 * summarizes the graph. Violations are thrown as one ValidationError
 * listing all of them.
 */
inline std::string cmd_validate(const std::string& graph_path, const std::string& config_path = "",
                                bool allow_multi = false) {
    std::map<std::string, std::vector<std::string>> roster;
    if (!config_path.empty()) roster = parse_config(read_file(config_path)).nodes;
    const HyperedgeTable table = parse_hyperedge_csv(read_file(graph_path));
    const HypergraphInput input = build_hypergraph(table, roster, allow_multi);
    const auto violations = validate(input);
    if (!violations.empty()) {
        std::string what;
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i > 0) what += "\n";
            what += violations[i];
        }
        throw ValidationError(what);
    }
    const MultimodalHypergraph graph(input);
    std::size_t nodes = 0, zero_degree = 0;
    for (std::size_t i = 0; i < graph.modality_count(); ++i) {
        nodes += graph.node_count(i);
        for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
            if (graph.degree(i, j) == 0) ++zero_degree;
    }
    std::string text = "valid: " + std::to_string(graph.modality_count()) + " modalities, " +
                       std::to_string(nodes) + " nodes";
    if (zero_degree > 0) text += " (" + std::to_string(zero_degree) + " zero-degree)";
    text += ", " + std::to_string(graph.hyperedge_count()) + " hyperedges\n";
    return text;
}

/**
 * Full ranking run: loads graph and config, solves, and renders the
 * rank report.
 */
inline std::string cmd_rank(const std::string& graph_path, const std::string& config_path,
                            bool allow_multi = false) {
    const auto problem = detail::load_problem(graph_path, config_path, allow_multi);
    const auto s = build_preference_vector(problem.graph, problem.bound.preference);
    const MumoResult result =
        mumorank(problem.graph, problem.bound.damping, s, problem.config.solver);

    JsonValue report = JsonValue::object();
    report["command"] = "rank";
    report["config"] = detail::config_echo(problem.config);
    report["graph"] = detail::graph_summary(problem.graph);
    report["node_ranks"] = detail::per_node_map(problem.graph, result.ranks.nodes);
    JsonValue edge_ranks = JsonValue::array();
    for (double value : result.ranks.hyperedges) edge_ranks.push_back(value);
    report["hyperedge_ranks"] = std::move(edge_ranks);
    report["iterations"] = result.iterations;
    report["residual"] = result.residual;
    return report.dump();
}

/**
 * Bound evaluation run: solves, derives the boundary statistics of the
 * preferred region, and renders every applicable outflow bound. The
 * equal-damping forms appear only when all damping factors coincide;
 * include_factored_equal additionally emits the factored rendering of
 * the refined equal-damping bound.
 */
inline std::string cmd_bounds(const std::string& graph_path, const std::string& config_path,
                              bool allow_multi = false, bool include_factored_equal = false) {
    const auto problem = detail::load_problem(graph_path, config_path, allow_multi);
    const auto s = build_preference_vector(problem.graph, problem.bound.preference);
    const MumoResult result =
        mumorank(problem.graph, problem.bound.damping, s, problem.config.solver);
    const BoundaryStats stats =
        boundary_stats(problem.graph, problem.bound.preference.sets, problem.bound.damping);
    const double observed =
        observed_outflow(result.ranks, problem.bound.preference.sets, problem.bound.damping);

    JsonValue report = JsonValue::object();
    report["command"] = "bounds";
    report["config"] = detail::config_echo(problem.config);
    report["graph"] = detail::graph_summary(problem.graph);
    report["boundary"] = stats.boundary;
    report["boundary_zeta"] = stats.boundary_zeta;
    JsonValue hvol = JsonValue::object();
    for (std::size_t i = 0; i < stats.hvol.size(); ++i)
        hvol[problem.graph.schema().names[i]] = static_cast<std::int64_t>(stats.hvol[i]);
    report["hvol"] = std::move(hvol);

    try {
        report["d_sat"] = problem.bound.damping.all_equal()
                              ? d_sat_equal(stats)
                              : d_sat_unequal(stats, problem.bound.damping);
    } catch (const DegenerateError&) {
        report["d_sat"] = nullptr;
    }
    const SaturationLevels levels = d0_sat_unequal(stats, problem.bound.damping);
    report["d0_sat"] = levels.d0;
    report["d_modality"] = detail::per_modality_map(problem.graph, levels.d);
    report["observed_outflow"] = observed;

    JsonValue bounds = JsonValue::object();
    const auto add = [&](MumoBoundVariant variant) {
        const BoundReport entry = bound_mumo(stats, problem.bound.damping, variant, observed);
        bounds[entry.inequality] = detail::bound_entry(problem.graph, entry);
    };
    add(MumoBoundVariant::unequal);
    add(MumoBoundVariant::unequal_d0);
    if (problem.bound.damping.all_equal()) {
        add(MumoBoundVariant::equal);
        add(MumoBoundVariant::equal_d0);
        if (include_factored_equal)
            report["equal_refined_factored"] =
                bound_mumo_equal_refined_factored(stats, problem.bound.damping[0]);
    }
    report["bounds"] = std::move(bounds);
    report["iterations"] = result.iterations;
    report["residual"] = result.residual;
    return report.dump();
}

/**
 * Monte Carlo check: runs the surfer for the requested number of counted
 * steps (plus a 10% burn-in on top), compares the empirical distribution
 * with the solver fixed point, and renders both.
 */
inline std::string cmd_simulate(const std::string& graph_path, const std::string& config_path,
                                std::uint64_t steps, std::uint64_t seed,
                                bool allow_multi = false) {
    if (steps == 0) throw SchemaError("simulate requires at least one step");
    const auto problem = detail::load_problem(graph_path, config_path, allow_multi);
    const auto s = build_preference_vector(problem.graph, problem.bound.preference);
    const MumoResult analytic =
        mumorank(problem.graph, problem.bound.damping, s, problem.config.solver);

    const WalkConfig walk = WalkConfig::for_counted_steps(steps, seed);
    const SimulationResult simulation = simulate(problem.graph, problem.bound.damping, s, walk);
    const DeviationReport deviation = compare(simulation.distribution, analytic.ranks.nodes);

    JsonValue report = JsonValue::object();
    report["command"] = "simulate";
    report["config"] = detail::config_echo(problem.config);
    report["graph"] = detail::graph_summary(problem.graph);
    report["steps"] = simulation.counted_steps;
    report["burn_in"] = walk.burn_in;
    report["seed"] = seed;
    report["walkers"] = static_cast<std::uint64_t>(walk.walkers);
    report["distribution"] = detail::per_node_map(problem.graph, simulation.distribution);
    JsonValue dev = JsonValue::object();
    dev["max_abs"] = deviation.max_abs;
    dev["l1"] = detail::per_modality_map(problem.graph, deviation.l1_per_modality);
    report["deviation"] = std::move(dev);
    JsonValue warnings = JsonValue::array();
    if (steps < 1000) warnings.push_back("insufficient samples");
    report["warnings"] = std::move(warnings);
    return report.dump();
}

} // namespace mumorank
