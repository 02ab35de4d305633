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

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <mumorank/errors.hpp>

namespace mumorank {

/**
 * How a preference (personalization) vector distributes its mass over the
 * preferred node set U.
 */
enum class PreferenceMode {
    uniform,        ///< equal mass 1/|U| on every node of U
    hub_preferring, ///< mass proportional to node degree within U
};

/**
 * Per-modality damping factors. For a unimodal graph the vector has one
 * entry. Every factor must lie in [0, 1].
 */
struct DampingSpec {
    std::vector<double> zeta;

    std::size_t size() const { return zeta.size(); }
    double operator[](std::size_t i) const { return zeta[i]; }

    /// Arithmetic mean of the per-modality factors.
    double mean() const {
        if (zeta.empty()) throw DegenerateError("damping vector is empty");
        return std::accumulate(zeta.begin(), zeta.end(), 0.0) / static_cast<double>(zeta.size());
    }

    /// True when every factor equals the first bit for bit.
    bool all_equal() const {
        for (double z : zeta)
            if (z != zeta.front()) return false;
        return true;
    }

    void check() const {
        if (zeta.empty()) throw SchemaError("damping vector is empty");
        for (double z : zeta)
            if (!(z >= 0.0 && z <= 1.0))
                throw SchemaError("damping factor " + std::to_string(z) + " outside [0, 1]");
    }
};

/**
 * Stopping rule and starting point shared by all iterative solvers.
 *
 * A solver stops once the L1 change of every rank block (one block per
 * modality) in a full sweep falls below tolerance.
 */
struct SolverConfig {
    enum class Init {
        uniform_per_modality,
        degree_proportional,
    };

    double tolerance = 1e-12;
    std::size_t max_iterations = 100000;
    Init initialization = Init::uniform_per_modality;

    void check() const {
        if (!(tolerance > 0.0)) throw SchemaError("tolerance must be positive");
        if (max_iterations == 0) throw SchemaError("max_iterations must be positive");
    }
};

/// Indices of selected nodes, one sorted set per modality.
using ModalitySets = std::vector<std::vector<std::uint32_t>>;

} // namespace mumorank
