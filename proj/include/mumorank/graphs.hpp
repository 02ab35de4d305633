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

#include <cstdint>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/preference.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

/**
 * Plain directed graph with parallel edges allowed. A random surfer at a
 * node follows one outgoing edge uniformly; nodes without outgoing edges
 * are treated by the solvers as linking to every other node.
 */
class DirectedGraph {
public:
    explicit DirectedGraph(std::size_t n) : out_(n) {}

    void add_edge(std::uint32_t from, std::uint32_t to) {
        if (from >= out_.size() || to >= out_.size())
            throw LookupError("edge endpoint out of range");
        out_[from].push_back(to);
    }

    std::size_t size() const { return out_.size(); }
    std::size_t out_degree(std::uint32_t v) const { return out_.at(v).size(); }
    const std::vector<std::uint32_t>& successors(std::uint32_t v) const { return out_.at(v); }
    bool dangling(std::uint32_t v) const { return out_.at(v).empty(); }

private:
    std::vector<std::vector<std::uint32_t>> out_;
};

/**
 * Undirected bipartite graph between clients and products. Parallel edges
 * are allowed and act as multiplicities.
 */
class BipartiteGraph {
public:
    BipartiteGraph(std::size_t clients, std::size_t products)
        : client_adj_(clients), product_adj_(products) {}

    void add_edge(std::uint32_t client, std::uint32_t product) {
        if (client >= client_adj_.size() || product >= product_adj_.size())
            throw LookupError("edge endpoint out of range");
        client_adj_[client].push_back(product);
        product_adj_[product].push_back(client);
    }

    std::size_t client_count() const { return client_adj_.size(); }
    std::size_t product_count() const { return product_adj_.size(); }
    std::size_t client_degree(std::uint32_t k) const { return client_adj_.at(k).size(); }
    std::size_t product_degree(std::uint32_t p) const { return product_adj_.at(p).size(); }
    const std::vector<std::uint32_t>& products_of(std::uint32_t k) const { return client_adj_.at(k); }
    const std::vector<std::uint32_t>& clients_of(std::uint32_t p) const { return product_adj_.at(p); }

private:
    std::vector<std::vector<std::uint32_t>> client_adj_;
    std::vector<std::vector<std::uint32_t>> product_adj_;
};

/// Preference vector over a directed graph; hub mode weighs by out-degree.
inline std::vector<double> build_preference_vector(const DirectedGraph& graph,
                                                   const std::vector<std::uint32_t>& set,
                                                   PreferenceMode mode) {
    return detail::preference_block(
        graph.size(), set, [&](std::uint32_t j) { return graph.out_degree(j); }, mode, "");
}

/// Preference vector over the client side of a bipartite graph.
inline std::vector<double> build_client_preference(const BipartiteGraph& graph,
                                                   const std::vector<std::uint32_t>& set,
                                                   PreferenceMode mode) {
    return detail::preference_block(
        graph.client_count(), set, [&](std::uint32_t j) { return graph.client_degree(j); }, mode,
        " on client side");
}

/// Preference vector over the product side of a bipartite graph.
inline std::vector<double> build_product_preference(const BipartiteGraph& graph,
                                                    const std::vector<std::uint32_t>& set,
                                                    PreferenceMode mode) {
    return detail::preference_block(
        graph.product_count(), set, [&](std::uint32_t j) { return graph.product_degree(j); }, mode,
        " on product side");
}

} // namespace mumorank
