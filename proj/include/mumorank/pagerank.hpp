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
#include <numeric>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/graphs.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

struct PageRankResult {
    std::vector<double> ranks;
    std::size_t iterations = 0;
    double residual = 0.0;
    /// Largest deviation of the rank sum from 1 seen across iterations.
    double max_drift = 0.0;
};

struct BipartitePageRankResult {
    std::vector<double> products;
    std::vector<double> clients;
    std::size_t iterations = 0;
    double residual = 0.0;
    double max_drift = 0.0;
};

namespace detail {

inline void check_distribution(const std::vector<double>& s, std::size_t n,
                               const char* what) {
    if (s.size() != n) throw SchemaError(std::string(what) + ": wrong length");
    double sum = 0.0;
    for (double v : s) {
        if (!(v >= 0.0)) throw SchemaError(std::string(what) + ": negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw SchemaError(std::string(what) + ": entries do not sum to 1");
}

inline double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

/**
 * Power iteration for r = (1 - z) * T r + z * s on a directed graph,
 * where T is the uniform out-edge transition with dangling nodes spread
 * over all other nodes, optionally made lazy as T' = (I + T) / 2.
 */
inline PageRankResult pagerank_power(const DirectedGraph& graph, double zeta,
                                     const std::vector<double>& s, const SolverConfig& config,
                                     bool lazy) {
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw SchemaError("damping factor outside [0, 1]");
    config.check();
    const std::size_t n = graph.size();
    if (n == 0) throw DegenerateError("graph has no nodes");
    check_distribution(s, n, "preference vector");

    bool any_dangling = false;
    for (std::uint32_t v = 0; v < n; ++v) any_dangling = any_dangling || graph.dangling(v);
    if (any_dangling && n == 1)
        throw DegenerateError("dangling node in a single-node graph has no replacement links");

    PageRankResult result;
    std::vector<double>& r = result.ranks;
    if (config.initialization == SolverConfig::Init::uniform_per_modality) {
        r.assign(n, 1.0 / static_cast<double>(n));
    } else {
        double total = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) total += static_cast<double>(graph.out_degree(v));
        if (total == 0.0)
            throw DegenerateError("degree-proportional start undefined: no edges");
        r.assign(n, 0.0);
        for (std::uint32_t v = 0; v < n; ++v)
            r[v] = static_cast<double>(graph.out_degree(v)) / total;
    }

    const double follow = lazy ? (1.0 - zeta) * 0.5 : (1.0 - zeta);
    std::vector<double> next(n);
    for (std::size_t it = 1; it <= config.max_iterations; ++it) {
        for (std::uint32_t v = 0; v < n; ++v) next[v] = zeta * s[v];
        if (lazy)
            for (std::uint32_t v = 0; v < n; ++v) next[v] += follow * r[v];
        double dangling_mass = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (graph.dangling(v)) {
                dangling_mass += r[v];
                continue;
            }
            const double share = follow * r[v] / static_cast<double>(graph.out_degree(v));
            for (std::uint32_t w : graph.successors(v)) next[w] += share;
        }
        if (dangling_mass > 0.0) {
            const double spread = follow * dangling_mass / static_cast<double>(n - 1);
            for (std::uint32_t v = 0; v < n; ++v) {
                next[v] += spread;
                if (graph.dangling(v))
                    next[v] -= follow * r[v] / static_cast<double>(n - 1);
            }
        }
        result.residual = l1_diff(next, r);
        const double sum = std::accumulate(next.begin(), next.end(), 0.0);
        result.max_drift = std::max(result.max_drift, std::abs(sum - 1.0));
        r.swap(next);
        result.iterations = it;
        if (result.residual < config.tolerance) return result;
    }
    throw ConvergenceError("pagerank did not converge within " +
                               std::to_string(config.max_iterations) + " iterations",
                           result.iterations, result.residual);
}

} // namespace detail

/**
 * Personalized PageRank with damping factor zeta: with probability zeta
 * the surfer jumps according to s, otherwise follows a uniformly chosen
 * outgoing edge; dangling nodes link to every other node.
 */
inline PageRankResult unimodal_pagerank(const DirectedGraph& graph, double zeta,
                                        const std::vector<double>& s,
                                        const SolverConfig& config = {}) {
    return detail::pagerank_power(graph, zeta, s, config, false);
}

/**
 * Lazy variant: the surfer first flips a fair coin to stay put. Ranks
 * coincide with unimodal_pagerank at damping 2 * zeta / (1 + zeta).
 */
inline PageRankResult lazy_pagerank(const DirectedGraph& graph, double zeta,
                                    const std::vector<double>& s,
                                    const SolverConfig& config = {}) {
    return detail::pagerank_power(graph, zeta, s, config, true);
}

/**
 * Coupled client/product ranking on a bipartite graph:
 *
 *   products = (1 - zeta_kp) * T_kp clients  + zeta_kp * s_products
 *   clients  = (1 - zeta_pk) * T_pk products + zeta_pk * s_clients
 *
 * updated in that order each sweep. Zero-degree nodes are excluded from
 * the walk and keep rank zero; preference mass on them is rejected.
 */
inline BipartitePageRankResult bipartite_pagerank(const BipartiteGraph& graph, double zeta_kp,
                                                  double zeta_pk,
                                                  const std::vector<double>& s_products,
                                                  const std::vector<double>& s_clients,
                                                  const SolverConfig& config = {}) {
    if (!(zeta_kp >= 0.0 && zeta_kp <= 1.0) || !(zeta_pk >= 0.0 && zeta_pk <= 1.0))
        throw SchemaError("damping factor outside [0, 1]");
    config.check();
    const std::size_t nk = graph.client_count();
    const std::size_t np = graph.product_count();
    detail::check_distribution(s_products, np, "product preference vector");
    detail::check_distribution(s_clients, nk, "client preference vector");

    std::size_t active_clients = 0, active_products = 0;
    for (std::uint32_t k = 0; k < nk; ++k) {
        if (graph.client_degree(k) > 0)
            ++active_clients;
        else if (s_clients[k] != 0.0)
            throw DegenerateError("preference mass on zero-degree client");
    }
    for (std::uint32_t p = 0; p < np; ++p) {
        if (graph.product_degree(p) > 0)
            ++active_products;
        else if (s_products[p] != 0.0)
            throw DegenerateError("preference mass on zero-degree product");
    }
    if (active_clients == 0 || active_products == 0)
        throw DegenerateError("a bipartite side has no active nodes");

    BipartitePageRankResult result;
    result.clients.assign(nk, 0.0);
    result.products.assign(np, 0.0);
    for (std::uint32_t k = 0; k < nk; ++k)
        if (graph.client_degree(k) > 0)
            result.clients[k] = 1.0 / static_cast<double>(active_clients);
    for (std::uint32_t p = 0; p < np; ++p)
        if (graph.product_degree(p) > 0)
            result.products[p] = 1.0 / static_cast<double>(active_products);

    std::vector<double> next_p(np), next_k(nk);
    for (std::size_t it = 1; it <= config.max_iterations; ++it) {
        for (std::uint32_t p = 0; p < np; ++p)
            next_p[p] = graph.product_degree(p) > 0 ? zeta_kp * s_products[p] : 0.0;
        for (std::uint32_t k = 0; k < nk; ++k) {
            if (graph.client_degree(k) == 0) continue;
            const double share =
                (1.0 - zeta_kp) * result.clients[k] / static_cast<double>(graph.client_degree(k));
            for (std::uint32_t p : graph.products_of(k)) next_p[p] += share;
        }
        for (std::uint32_t k = 0; k < nk; ++k)
            next_k[k] = graph.client_degree(k) > 0 ? zeta_pk * s_clients[k] : 0.0;
        for (std::uint32_t p = 0; p < np; ++p) {
            if (graph.product_degree(p) == 0) continue;
            const double share =
                (1.0 - zeta_pk) * next_p[p] / static_cast<double>(graph.product_degree(p));
            for (std::uint32_t k : graph.clients_of(p)) next_k[k] += share;
        }
        result.residual = std::max(detail::l1_diff(next_p, result.products),
                                   detail::l1_diff(next_k, result.clients));
        const double sum_p = std::accumulate(next_p.begin(), next_p.end(), 0.0);
        const double sum_k = std::accumulate(next_k.begin(), next_k.end(), 0.0);
        result.max_drift = std::max({result.max_drift, std::abs(sum_p - 1.0), std::abs(sum_k - 1.0)});
        result.products.swap(next_p);
        result.clients.swap(next_k);
        result.iterations = it;
        if (result.residual < config.tolerance) return result;
    }
    throw ConvergenceError("bipartite pagerank did not converge within " +
                               std::to_string(config.max_iterations) + " iterations",
                           result.iterations, result.residual);
}

} // namespace mumorank
