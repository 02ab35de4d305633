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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

/// Per-modality node vectors, e.g. preference mass or ranks.
using ModalityVectors = std::vector<std::vector<double>>;

/**
 * Preferred node sets, one per modality, plus the rule that turns them
 * into a preference vector.
 */
struct PreferenceSpec {
    ModalitySets sets;
    PreferenceMode mode = PreferenceMode::hub_preferring;
};

/**
 * Resolves per-modality label lists to sorted, duplicate-free index sets.
 * Unknown labels are rejected.
 */
inline ModalitySets resolve_sets(const MultimodalHypergraph& graph,
                                 const std::vector<std::vector<std::string>>& labels) {
    if (labels.size() != graph.modality_count())
        throw SchemaError("expected one node set per modality");
    ModalitySets sets(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (const auto& label : labels[i]) sets[i].push_back(graph.node_index(i, label));
        std::sort(sets[i].begin(), sets[i].end());
        sets[i].erase(std::unique(sets[i].begin(), sets[i].end()), sets[i].end());
    }
    return sets;
}

namespace detail {

/**
 * Shared preference-vector construction over a single node block.
 * The weight of node j is 1 in uniform mode and degree(j) in
 * hub-preferring mode; the vector is the normalized weights over U.
 */
template <typename DegreeFn>
std::vector<double> preference_block(std::size_t n, const std::vector<std::uint32_t>& set,
                                     DegreeFn&& degree_of, PreferenceMode mode,
                                     const std::string& where) {
    if (set.empty()) throw DegenerateError("empty preferred set" + where);
    std::vector<double> s(n, 0.0);
    if (mode == PreferenceMode::uniform) {
        const double mass = 1.0 / static_cast<double>(set.size());
        for (std::uint32_t j : set) {
            if (j >= n) throw LookupError("preferred node index out of range" + where);
            s[j] = mass;
        }
        return s;
    }
    double total = 0.0;
    for (std::uint32_t j : set) {
        if (j >= n) throw LookupError("preferred node index out of range" + where);
        total += static_cast<double>(degree_of(j));
    }
    if (total == 0.0)
        throw DegenerateError("preferred set has zero total degree" + where);
    for (std::uint32_t j : set) s[j] = static_cast<double>(degree_of(j)) / total;
    return s;
}

} // namespace detail

/**
 * Builds the per-modality preference vectors. Each modality's vector sums
 * to one and is supported on that modality's preferred set.
 */
inline ModalityVectors build_preference_vector(const MultimodalHypergraph& graph,
                                               const PreferenceSpec& spec) {
    if (spec.sets.size() != graph.modality_count())
        throw SchemaError("expected one preferred set per modality");
    ModalityVectors s(graph.modality_count());
    for (std::size_t i = 0; i < graph.modality_count(); ++i) {
        const std::string where = " in modality '" + graph.schema().names[i] + "'";
        s[i] = detail::preference_block(
            graph.node_count(i), spec.sets[i],
            [&](std::uint32_t j) { return graph.degree(i, j); }, spec.mode, where);
    }
    return s;
}

} // namespace mumorank
