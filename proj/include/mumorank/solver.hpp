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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/preference.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

/**
 * Ranks over a multimodal hypergraph: one value per node (pruned nodes
 * hold zero) and one value per hyperedge. Each modality's node ranks sum
 * to one at the fixed point; hyperedge ranks are left unnormalized, their
 * total equals the sum of (1 - zeta_i) over modalities.
 */
struct RankVector {
    ModalityVectors nodes;
    std::vector<double> hyperedges;
};

struct MumoResult {
    RankVector ranks;
    std::size_t iterations = 0;
    double residual = 0.0;
    /// Largest per-modality deviation of a rank sum from 1 across iterations.
    double max_drift = 0.0;
};

namespace detail {

/// Step (a): pull rank from nodes onto hyperedges.
inline void edges_from_nodes(const MultimodalHypergraph& graph, const DampingSpec& damping,
                             const ModalityVectors& nodes, std::vector<double>& edges) {
    const std::size_t m_count = graph.modality_count();
    edges.assign(graph.hyperedge_count(), 0.0);
    for (std::size_t e = 0; e < graph.hyperedge_count(); ++e) {
        const auto& edge = graph.hyperedge(e);
        double value = 0.0;
        for (std::size_t i = 0; i < m_count; ++i) {
            const std::uint32_t j = edge[i];
            value += (1.0 - damping[i]) * nodes[i][j] / static_cast<double>(graph.degree(i, j));
        }
        edges[e] = value;
    }
}

/// Step (b): push hyperedge rank back onto nodes and add damped preference.
inline void nodes_from_edges(const MultimodalHypergraph& graph, double zeta_mean,
                             const ModalityVectors& s, const std::vector<double>& edges,
                             ModalityVectors& nodes) {
    const std::size_t m_count = graph.modality_count();
    const double inv_m = 1.0 / static_cast<double>(m_count);
    for (std::size_t i = 0; i < m_count; ++i)
        for (std::size_t j = 0; j < nodes[i].size(); ++j)
            nodes[i][j] = zeta_mean * s[i][j];
    for (std::size_t e = 0; e < graph.hyperedge_count(); ++e) {
        const double share = edges[e] * inv_m;
        const auto& edge = graph.hyperedge(e);
        for (std::size_t i = 0; i < m_count; ++i) nodes[i][edge[i]] += share;
    }
}

inline void check_mumo_inputs(const MultimodalHypergraph& graph, const DampingSpec& damping,
                              const ModalityVectors& s) {
    damping.check();
    if (damping.size() != graph.modality_count())
        throw SchemaError("expected one damping factor per modality");
    if (graph.hyperedge_count() == 0) throw DegenerateError("no hyperedges");
    if (s.size() != graph.modality_count())
        throw SchemaError("expected one preference vector per modality");
    for (std::size_t i = 0; i < s.size(); ++i) {
        check_distribution(s[i], graph.node_count(i),
                           ("preference vector of modality '" + graph.schema().names[i] + "'").c_str());
        for (std::size_t j = 0; j < s[i].size(); ++j)
            if (s[i][j] != 0.0 && graph.degree(i, static_cast<std::uint32_t>(j)) == 0)
                throw DegenerateError("preference mass on zero-degree node '" +
                                      graph.label(i, static_cast<std::uint32_t>(j)) + "'");
    }
}

} // namespace detail

/**
 * One application of the two-step rank update:
 *
 *  (a) every hyperedge h collects sum over its members j of
 *      (1 - zeta_{m(j)}) * rank(j) / degree(j)
 *  (b) every node j collects sum over incident hyperedges of
 *      rank(h) / M, plus mean(zeta) * s(j)
 *
 * Shapes must match the graph; no normalization is applied.
 */
inline RankVector mumorank_step(const MultimodalHypergraph& graph, const DampingSpec& damping,
                                const ModalityVectors& s, const RankVector& current) {
    detail::check_mumo_inputs(graph, damping, s);
    if (current.nodes.size() != graph.modality_count())
        throw SchemaError("rank vector shape does not match the graph");
    for (std::size_t i = 0; i < current.nodes.size(); ++i)
        if (current.nodes[i].size() != graph.node_count(i))
            throw SchemaError("rank vector shape does not match the graph");

    RankVector next;
    next.nodes.resize(graph.modality_count());
    for (std::size_t i = 0; i < graph.modality_count(); ++i)
        next.nodes[i].resize(graph.node_count(i));
    detail::edges_from_nodes(graph, damping, current.nodes, next.hyperedges);
    detail::nodes_from_edges(graph, damping.mean(), s, next.hyperedges, next.nodes);
    return next;
}

/**
 * Iterates the two-step update from the configured starting point until
 * every modality's L1 change falls below the tolerance.
 *
 * Rank mass is conserved by the update itself; the solver only monitors
 * the per-modality sums and fails loudly if accumulated floating-point
 * drift ever exceeds 1e-10, rather than renormalizing.
 */
inline MumoResult mumorank(const MultimodalHypergraph& graph, const DampingSpec& damping,
                           const ModalityVectors& s, const SolverConfig& config = {}) {
    detail::check_mumo_inputs(graph, damping, s);
    config.check();
    const std::size_t m_count = graph.modality_count();

    MumoResult result;
    ModalityVectors& r = result.ranks.nodes;
    r.resize(m_count);
    for (std::size_t i = 0; i < m_count; ++i) {
        std::size_t active = 0;
        for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
            if (graph.degree(i, j) > 0) ++active;
        if (active == 0)
            throw DegenerateError("modality '" + graph.schema().names[i] + "' has no active nodes");
        r[i].assign(graph.node_count(i), 0.0);
        if (config.initialization == SolverConfig::Init::uniform_per_modality) {
            const double mass = 1.0 / static_cast<double>(active);
            for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
                if (graph.degree(i, j) > 0) r[i][j] = mass;
        } else {
            const double total = static_cast<double>(graph.hyperedge_count());
            for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
                r[i][j] = static_cast<double>(graph.degree(i, j)) / total;
        }
    }

    const double zeta_mean = damping.mean();
    std::vector<double>& edges = result.ranks.hyperedges;
    ModalityVectors next(m_count);
    for (std::size_t i = 0; i < m_count; ++i) next[i].resize(graph.node_count(i));

    for (std::size_t it = 1; it <= config.max_iterations; ++it) {
        detail::edges_from_nodes(graph, damping, r, edges);
        detail::nodes_from_edges(graph, zeta_mean, s, edges, next);
        result.residual = 0.0;
        for (std::size_t i = 0; i < m_count; ++i) {
            double change = 0.0, sum = 0.0;
            for (std::size_t j = 0; j < next[i].size(); ++j) {
                change += std::abs(next[i][j] - r[i][j]);
                sum += next[i][j];
            }
            result.residual = std::max(result.residual, change);
            result.max_drift = std::max(result.max_drift, std::abs(sum - 1.0));
        }
        r.swap(next);
        result.iterations = it;
        if (result.residual < config.tolerance) {
            if (result.max_drift > 1e-10)
                throw Error("conservation drift " + std::to_string(result.max_drift) +
                            " exceeds 1e-10");
            detail::edges_from_nodes(graph, damping, r, edges);
            return result;
        }
    }
    throw ConvergenceError("mumorank did not converge within " +
                               std::to_string(config.max_iterations) + " iterations",
                           result.iterations, result.residual);
}

} // namespace mumorank
