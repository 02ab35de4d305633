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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/preference.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

/**
 * Run settings as read from the JSON config document. Modalities are
 * addressed by name here and resolved against a concrete graph later.
 */
struct RunConfig {
    std::map<std::string, double> damping;
    std::map<std::string, std::vector<std::string>> preferred;
    PreferenceMode preference_mode = PreferenceMode::hub_preferring;
    std::map<std::string, std::vector<std::string>> nodes;
    SolverConfig solver;
};

namespace detail {

inline std::map<std::string, std::vector<std::string>> string_list_map(const nlohmann::json& value,
                                                                       const char* key) {
    if (!value.is_object())
        throw SchemaError(std::string("config: '") + key + "' must be an object");
    std::map<std::string, std::vector<std::string>> result;
    for (const auto& [name, list] : value.items()) {
        if (!list.is_array())
            throw SchemaError(std::string("config: '") + key + "." + name + "' must be an array");
        auto& out = result[name];
        for (const auto& entry : list) {
            if (!entry.is_string())
                throw SchemaError(std::string("config: '") + key + "." + name +
                                  "' must contain strings");
            out.push_back(entry.get<std::string>());
        }
    }
    return result;
}

} // namespace detail

/**
 * Parses and checks a config document:
 *
 *   {
 *     "damping":  {"<modality>": number in [0, 1], ...},          required
 *     "preferred": {"<modality>": ["<node>", ...], ...},          required
 *     "preference_mode": "uniform" | "hub_preferring",            optional
 *     "nodes":    {"<modality>": ["<node>", ...], ...},           optional roster
 *     "solver":   {"tolerance": number, "max_iterations": int}    optional
 *   }
 *
 * Unknown keys are rejected so typos cannot silently fall back to
 * defaults. Modality names are checked against the graph at bind time,
 * not here.
 */
inline RunConfig parse_config(std::string_view text) {
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& error) {
        throw SchemaError(std::string("config: ") + error.what());
    }
    if (!document.is_object()) throw SchemaError("config: top level must be an object");

    RunConfig config;
    for (const auto& [key, value] : document.items()) {
        if (key == "damping") {
            if (!value.is_object()) throw SchemaError("config: 'damping' must be an object");
            for (const auto& [name, zeta] : value.items()) {
                if (!zeta.is_number())
                    throw SchemaError("config: damping factor of '" + name + "' must be a number");
                const double z = zeta.get<double>();
                if (!(z >= 0.0 && z <= 1.0))
                    throw SchemaError("config: damping factor of '" + name + "' outside [0, 1]");
                config.damping[name] = z;
            }
        } else if (key == "preferred") {
            config.preferred = detail::string_list_map(value, "preferred");
        } else if (key == "preference_mode") {
            if (!value.is_string())
                throw SchemaError("config: 'preference_mode' must be a string");
            const auto mode = value.get<std::string>();
            if (mode == "uniform")
                config.preference_mode = PreferenceMode::uniform;
            else if (mode == "hub_preferring")
                config.preference_mode = PreferenceMode::hub_preferring;
            else
                throw SchemaError("config: unknown preference_mode '" + mode + "'");
        } else if (key == "nodes") {
            config.nodes = detail::string_list_map(value, "nodes");
        } else if (key == "solver") {
            if (!value.is_object()) throw SchemaError("config: 'solver' must be an object");
            for (const auto& [name, entry] : value.items()) {
                if (name == "tolerance") {
                    if (!entry.is_number() || !(entry.get<double>() > 0.0))
                        throw SchemaError("config: solver.tolerance must be a positive number");
                    config.solver.tolerance = entry.get<double>();
                } else if (name == "max_iterations") {
                    if (!entry.is_number_unsigned() || entry.get<std::uint64_t>() == 0)
                        throw SchemaError(
                            "config: solver.max_iterations must be a positive integer");
                    config.solver.max_iterations = entry.get<std::uint64_t>();
                } else {
                    throw SchemaError("config: unknown solver key '" + name + "'");
                }
            }
        } else {
            throw SchemaError("config: unknown key '" + key + "'");
        }
    }
    if (config.damping.empty()) throw SchemaError("config: 'damping' section is required");
    if (config.preferred.empty()) throw SchemaError("config: 'preferred' section is required");
    return config;
}

/**
 * Resolves the named config sections against a concrete graph: every
 * modality needs exactly one damping factor and one preferred set.
 */
struct BoundConfig {
    DampingSpec damping;
    PreferenceSpec preference;
};

inline BoundConfig bind_config(const RunConfig& config, const MultimodalHypergraph& graph) {
    BoundConfig bound;
    for (const auto& [name, zeta] : config.damping) {
        (void)zeta;
        if (!graph.schema().find(name))
            throw LookupError("config: damping references unknown modality '" + name + "'");
    }
    for (const auto& [name, labels] : config.preferred) {
        (void)labels;
        if (!graph.schema().find(name))
            throw LookupError("config: preferred references unknown modality '" + name + "'");
    }
    std::vector<std::vector<std::string>> preferred_labels(graph.modality_count());
    for (std::size_t i = 0; i < graph.modality_count(); ++i) {
        const std::string& name = graph.schema().names[i];
        auto damping_it = config.damping.find(name);
        if (damping_it == config.damping.end())
            throw SchemaError("config: missing damping factor for modality '" + name + "'");
        bound.damping.zeta.push_back(damping_it->second);
        auto preferred_it = config.preferred.find(name);
        if (preferred_it == config.preferred.end())
            throw SchemaError("config: missing preferred set for modality '" + name + "'");
        preferred_labels[i] = preferred_it->second;
    }
    bound.preference.mode = config.preference_mode;
    bound.preference.sets = resolve_sets(graph, preferred_labels);
    return bound;
}

} // namespace mumorank
