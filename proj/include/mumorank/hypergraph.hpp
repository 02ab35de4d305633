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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <mumorank/errors.hpp>

namespace mumorank {

/**
 * Ordered list of modality names. The position of a name is its modality
 * index everywhere else in the library.
 */
struct ModalitySchema {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& name) const {
        if (auto i = find(name)) return *i;
        throw LookupError("unknown modality '" + name + "'");
    }
};

/// A node addressed by modality index and label.
struct NodeRef {
    std::size_t modality;
    std::string id;
};

/**
 * Raw hypergraph under construction. Permits malformed content (wrong
 * hyperedge cardinality, references to undeclared nodes, duplicates) so
 * that validation can report everything instead of failing on the first
 * problem.
 */
class HypergraphInput {
public:
    /// One raw hyperedge member: modality index plus node label.
    struct RawMember {
        std::uint32_t modality;
        std::string label;
    };

    /**
     * @param schema              modality names, in column order
     * @param multiplicity_allowed keep duplicate hyperedges instead of
     *                             reporting them as violations
     * @param closed_universe     when true, rows no longer declare nodes;
     *                             every member must already be declared
     *                             (used together with an explicit roster)
     */
    explicit HypergraphInput(ModalitySchema schema, bool multiplicity_allowed = false,
                             bool closed_universe = false)
        : schema_(std::move(schema)),
          multiplicity_allowed_(multiplicity_allowed),
          closed_universe_(closed_universe),
          labels_(schema_.size()),
          label_index_(schema_.size()) {}

    /// Declares a node; repeated declarations of the same label are ignored.
    void declare_node(std::size_t modality, const std::string& label) {
        if (modality >= schema_.size()) throw LookupError("modality index out of range");
        auto& idx = label_index_[modality];
        if (idx.emplace(label, static_cast<std::uint32_t>(labels_[modality].size())).second)
            labels_[modality].push_back(label);
    }

    /// Adds a hyperedge from raw members without any well-formedness check.
    void add_hyperedge(std::vector<RawMember> members) {
        if (!closed_universe_)
            for (const auto& m : members)
                if (m.modality < schema_.size()) declare_node(m.modality, m.label);
        edges_.push_back(std::move(members));
    }

    /// Adds one well-shaped row: exactly one label per modality, in order.
    void add_row(const std::vector<std::string>& labels) {
        std::vector<RawMember> members;
        members.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            members.push_back({static_cast<std::uint32_t>(i), labels[i]});
        add_hyperedge(std::move(members));
    }

    const ModalitySchema& schema() const { return schema_; }
    bool multiplicity_allowed() const { return multiplicity_allowed_; }
    std::size_t node_count(std::size_t modality) const { return labels_.at(modality).size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& labels(std::size_t modality) const { return labels_.at(modality); }
    const std::vector<std::vector<RawMember>>& edges() const { return edges_; }

    bool declared(std::size_t modality, const std::string& label) const {
        return label_index_.at(modality).count(label) > 0;
    }

    std::optional<std::uint32_t> find(std::size_t modality, const std::string& label) const {
        const auto& idx = label_index_.at(modality);
        auto it = idx.find(label);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }

private:
    ModalitySchema schema_;
    bool multiplicity_allowed_;
    bool closed_universe_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::unordered_map<std::string, std::uint32_t>> label_index_;
    std::vector<std::vector<RawMember>> edges_;
};

/**
 * Checks every structural invariant and returns one message per violation.
 * An empty result means the input compiles into a MultimodalHypergraph.
 *
 * Checked invariants:
 *  - at least two modalities, names unique and non-empty
 *  - every hyperedge has exactly one member per modality
 *  - every member references a declared node of its modality
 *  - no duplicate hyperedges unless multiplicity is allowed
 */
inline std::vector<std::string> validate(const HypergraphInput& input) {
    std::vector<std::string> violations;
    const auto& schema = input.schema();
    const std::size_t m_count = schema.size();

    if (m_count < 2)
        violations.push_back("modality count " + std::to_string(m_count) +
                             " is below the minimum of 2");
    for (std::size_t i = 0; i < m_count; ++i) {
        if (schema.names[i].empty())
            violations.push_back("modality " + std::to_string(i) + " has an empty name");
        for (std::size_t j = i + 1; j < m_count; ++j)
            if (schema.names[i] == schema.names[j])
                violations.push_back("duplicate modality name '" + schema.names[i] + "'");
    }

    // Normalized member lists double as duplicate-detection keys.
    std::map<std::vector<std::pair<std::uint32_t, std::string>>, std::size_t> seen;
    for (std::size_t e = 0; e < input.edges().size(); ++e) {
        const auto& members = input.edges()[e];
        const std::string tag = "hyperedge " + std::to_string(e);

        bool eligible = members.size() == m_count;
        std::vector<std::size_t> per_modality(m_count, 0);
        for (const auto& member : members) {
            if (member.modality >= m_count) {
                violations.push_back(tag + ": modality index " +
                                     std::to_string(member.modality) + " out of range");
                eligible = false;
                continue;
            }
            ++per_modality[member.modality];
            if (!input.declared(member.modality, member.label)) {
                violations.push_back(tag + ": node '" + member.label +
                                     "' not declared in modality '" +
                                     schema.names[member.modality] + "'");
                eligible = false;
            }
        }
        if (members.size() != m_count) {
            violations.push_back(tag + ": cardinality " + std::to_string(members.size()) +
                                 " != " + std::to_string(m_count));
        } else {
            for (std::size_t i = 0; i < m_count; ++i)
                if (per_modality[i] != 1) {
                    violations.push_back(tag + ": modality '" + schema.names[i] + "' appears " +
                                         std::to_string(per_modality[i]) + " times");
                    eligible = false;
                }
        }
        if (!eligible) continue;

        std::vector<std::pair<std::uint32_t, std::string>> key;
        key.reserve(members.size());
        for (const auto& member : members) key.emplace_back(member.modality, member.label);
        std::sort(key.begin(), key.end());
        auto [it, inserted] = seen.emplace(std::move(key), e);
        if (!inserted && !input.multiplicity_allowed())
            violations.push_back(tag + ": duplicate of hyperedge " + std::to_string(it->second));
    }
    return violations;
}

/**
 * Immutable multimodal hypergraph. Every hyperedge connects exactly one
 * node of each modality. Construction validates the input and rejects it
 * if any invariant is broken; afterwards all queries are const and safe
 * for concurrent reads.
 */
class MultimodalHypergraph {
public:
    /// Members of one hyperedge, indexed by modality.
    using Hyperedge = std::vector<std::uint32_t>;

    explicit MultimodalHypergraph(const HypergraphInput& input) {
        auto violations = validate(input);
        if (!violations.empty()) {
            std::string what = "invalid hypergraph (" + std::to_string(violations.size()) +
                               " violation" + (violations.size() == 1 ? "" : "s") + "):";
            for (const auto& v : violations) what += "\n  " + v;
            throw ValidationError(what);
        }

        schema_ = input.schema();
        multiplicity_allowed_ = input.multiplicity_allowed();
        const std::size_t m_count = schema_.size();
        labels_.resize(m_count);
        label_index_.resize(m_count);
        for (std::size_t i = 0; i < m_count; ++i) {
            labels_[i] = input.labels(i);
            for (std::uint32_t j = 0; j < labels_[i].size(); ++j)
                label_index_[i].emplace(labels_[i][j], j);
        }

        edges_.reserve(input.edge_count());
        for (const auto& raw : input.edges()) {
            Hyperedge edge(m_count, 0);
            for (const auto& member : raw)
                edge[member.modality] = *input.find(member.modality, member.label);
            edges_.push_back(std::move(edge));
        }

        incidence_.resize(m_count);
        for (std::size_t i = 0; i < m_count; ++i) incidence_[i].resize(labels_[i].size());
        for (std::uint32_t e = 0; e < edges_.size(); ++e)
            for (std::size_t i = 0; i < m_count; ++i)
                incidence_[i][edges_[e][i]].push_back(e);
    }

    const ModalitySchema& schema() const { return schema_; }
    std::size_t modality_count() const { return schema_.size(); }
    std::size_t node_count(std::size_t modality) const { return labels_.at(modality).size(); }
    std::size_t hyperedge_count() const { return edges_.size(); }
    bool multiplicity_allowed() const { return multiplicity_allowed_; }

    const std::vector<Hyperedge>& hyperedges() const { return edges_; }
    const Hyperedge& hyperedge(std::size_t e) const { return edges_.at(e); }

    const std::vector<std::string>& labels(std::size_t modality) const {
        return labels_.at(modality);
    }

    const std::string& label(std::size_t modality, std::uint32_t node) const {
        return labels_.at(modality).at(node);
    }

    std::optional<std::uint32_t> find_node(std::size_t modality, const std::string& label) const {
        const auto& idx = label_index_.at(modality);
        auto it = idx.find(label);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t node_index(std::size_t modality, const std::string& label) const {
        if (auto j = find_node(modality, label)) return *j;
        throw LookupError("unknown node '" + label + "' in modality '" +
                          schema_.names.at(modality) + "'");
    }

    /// Number of hyperedges containing the node.
    std::size_t degree(std::size_t modality, std::uint32_t node) const {
        return incidence_.at(modality).at(node).size();
    }

    std::size_t degree(const NodeRef& node) const {
        if (node.modality >= schema_.size()) throw LookupError("modality index out of range");
        return degree(node.modality, node_index(node.modality, node.id));
    }

    /// Hyperedge indices containing the node, in input order, with multiplicity.
    const std::vector<std::uint32_t>& incident_hyperedges(std::size_t modality,
                                                          std::uint32_t node) const {
        return incidence_.at(modality).at(node);
    }

    /// Sum of node degrees over one modality; equals the hyperedge count.
    std::size_t modality_degree_sum(std::size_t modality) const {
        if (modality >= schema_.size()) throw LookupError("modality index out of range");
        std::size_t sum = 0;
        for (const auto& inc : incidence_[modality]) sum += inc.size();
        return sum;
    }

private:
    ModalitySchema schema_;
    bool multiplicity_allowed_ = false;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::unordered_map<std::string, std::uint32_t>> label_index_;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<std::vector<std::uint32_t>>> incidence_;
};

/**
 * The hypergraph seen as a bipartite incidence structure between active
 * nodes and hyperedges. Nodes without any incident hyperedge are pruned
 * from the random-walk state space; they stay visible in reports with
 * rank zero. Taking the view of a graph whose nodes are all active is
 * the identity classification, so the operation is idempotent.
 */
class GeneralizedGraphView {
public:
    explicit GeneralizedGraphView(const MultimodalHypergraph& graph) : graph_(&graph) {
        const std::size_t m_count = graph.modality_count();
        active_.resize(m_count);
        pruned_.resize(m_count);
        for (std::size_t i = 0; i < m_count; ++i)
            for (std::uint32_t j = 0; j < graph.node_count(i); ++j)
                (graph.degree(i, j) > 0 ? active_[i] : pruned_[i]).push_back(j);
    }

    const MultimodalHypergraph& graph() const { return *graph_; }

    const std::vector<std::uint32_t>& active(std::size_t modality) const {
        return active_.at(modality);
    }

    const std::vector<std::uint32_t>& pruned(std::size_t modality) const {
        return pruned_.at(modality);
    }

    bool is_active(std::size_t modality, std::uint32_t node) const {
        return graph_->degree(modality, node) > 0;
    }

    std::size_t active_count(std::size_t modality) const { return active_.at(modality).size(); }

    std::size_t pruned_total() const {
        std::size_t n = 0;
        for (const auto& p : pruned_) n += p.size();
        return n;
    }

    /// Active original nodes plus one supernode per hyperedge.
    std::size_t generalized_node_count() const {
        std::size_t n = graph_->hyperedge_count();
        for (const auto& a : active_) n += a.size();
        return n;
    }

private:
    const MultimodalHypergraph* graph_;
    std::vector<std::vector<std::uint32_t>> active_;
    std::vector<std::vector<std::uint32_t>> pruned_;
};

inline GeneralizedGraphView generalized_view(const MultimodalHypergraph& graph) {
    return GeneralizedGraphView(graph);
}

} // namespace mumorank
