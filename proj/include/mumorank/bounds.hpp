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
#include <optional>
#include <string>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/graphs.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/pagerank.hpp>
#include <mumorank/solver.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

/// Slack granted when deciding whether an inequality held numerically.
inline constexpr double kHoldsSlack = 1e-12;

inline bool bound_holds(double observed, double bound) {
    return observed <= bound + kHoldsSlack;
}

/**
 * Boundary geometry of a preferred region U (one node set per modality)
 * inside a multimodal hypergraph.
 *
 * For each hyperedge h, inside_count is the number of members lying in
 * their modality's preferred set, and inside_mask records which
 * modalities those are. hvol is the hypergraph volume per modality: the
 * total degree of the preferred nodes, an exact incidence count.
 */
struct BoundaryStats {
    std::vector<std::int64_t> hvol;
    std::vector<std::uint32_t> inside_count;
    std::vector<std::uint64_t> inside_mask;
    /// Sum over hyperedges of inside_count * outside_count / M.
    double boundary = 0.0;
    /// Same sum with each inside member weighted by (1 - zeta of its modality).
    double boundary_zeta = 0.0;
    std::size_t modality_count = 0;
    std::size_t hyperedge_count = 0;
};

inline BoundaryStats boundary_stats(const MultimodalHypergraph& graph, const ModalitySets& sets,
                                    const DampingSpec& damping) {
    damping.check();
    const std::size_t m_count = graph.modality_count();
    if (sets.size() != m_count) throw SchemaError("expected one node set per modality");
    if (damping.size() != m_count) throw SchemaError("expected one damping factor per modality");
    if (m_count > 64) throw SchemaError("more than 64 modalities are not supported");

    BoundaryStats stats;
    stats.modality_count = m_count;
    stats.hyperedge_count = graph.hyperedge_count();
    stats.hvol.assign(m_count, 0);
    std::vector<std::vector<char>> member(m_count);
    for (std::size_t i = 0; i < m_count; ++i) {
        member[i].assign(graph.node_count(i), 0);
        for (std::uint32_t j : sets[i]) {
            if (j >= graph.node_count(i)) throw LookupError("preferred node index out of range");
            if (!member[i][j]) stats.hvol[i] += static_cast<std::int64_t>(graph.degree(i, j));
            member[i][j] = 1;
        }
    }

    stats.inside_count.reserve(graph.hyperedge_count());
    stats.inside_mask.reserve(graph.hyperedge_count());
    const double inv_m = 1.0 / static_cast<double>(m_count);
    for (const auto& edge : graph.hyperedges()) {
        std::uint32_t inside = 0;
        std::uint64_t mask = 0;
        double damped_inside = 0.0;
        for (std::size_t i = 0; i < m_count; ++i) {
            if (member[i][edge[i]]) {
                ++inside;
                mask |= std::uint64_t{1} << i;
                damped_inside += 1.0 - damping[i];
            }
        }
        const auto outside = static_cast<double>(m_count - inside);
        stats.inside_count.push_back(inside);
        stats.inside_mask.push_back(mask);
        stats.boundary += static_cast<double>(inside) * outside * inv_m;
        stats.boundary_zeta += outside * inv_m * damped_inside;
    }
    return stats;
}

/**
 * Damped rank mass outside the preferred region: the sum over modalities
 * of zeta_i times the rank of modality-i nodes not in U_i.
 */
inline double observed_outflow(const RankVector& ranks, const ModalitySets& sets,
                               const DampingSpec& damping) {
    if (ranks.nodes.size() != sets.size() || damping.size() != sets.size())
        throw SchemaError("shape mismatch between ranks, sets, and damping");
    double total = 0.0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<char> member(ranks.nodes[i].size(), 0);
        for (std::uint32_t j : sets[i]) member.at(j) = 1;
        double outside = 0.0;
        for (std::size_t j = 0; j < ranks.nodes[i].size(); ++j)
            if (!member[j]) outside += ranks.nodes[i][j];
        total += damping[i] * outside;
    }
    return total;
}

namespace detail {

inline void require_positive_hvol(const BoundaryStats& stats) {
    for (std::int64_t v : stats.hvol)
        if (v <= 0)
            throw DegenerateError("a preferred set has zero hypergraph volume; "
                                  "the saturation value is undefined");
}

struct DirectedCut {
    std::vector<char> member;
    std::int64_t volume = 0;
    std::int64_t crossing = 0;
};

inline DirectedCut directed_cut(const DirectedGraph& graph, const std::vector<std::uint32_t>& set) {
    DirectedCut cut;
    cut.member.assign(graph.size(), 0);
    for (std::uint32_t v : set) {
        if (v >= graph.size()) throw LookupError("preferred node index out of range");
        cut.member[v] = 1;
    }
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        if (!cut.member[v]) continue;
        cut.volume += static_cast<std::int64_t>(graph.out_degree(v));
        for (std::uint32_t w : graph.successors(v))
            if (!cut.member[w]) ++cut.crossing;
    }
    if (cut.volume == 0) throw DegenerateError("preferred set has zero volume");
    return cut;
}

inline double mass_outside(const std::vector<double>& ranks, const std::vector<char>& member) {
    double outside = 0.0;
    for (std::size_t v = 0; v < ranks.size(); ++v)
        if (!member[v]) outside += ranks[v];
    return outside;
}

} // namespace detail

/// Largest uniform saturation level, all damping factors equal: max 1 / HVol.
inline double d_sat_equal(const BoundaryStats& stats) {
    detail::require_positive_hvol(stats);
    double value = 0.0;
    for (std::int64_t v : stats.hvol) value = std::max(value, 1.0 / static_cast<double>(v));
    return value;
}

/// Per-modality saturation level under unequal damping: max mean(zeta) / (zeta_i * HVol_i).
inline double d_sat_unequal(const BoundaryStats& stats, const DampingSpec& damping) {
    if (damping.size() != stats.hvol.size())
        throw SchemaError("expected one damping factor per modality");
    detail::require_positive_hvol(stats);
    const double mean = damping.mean();
    double value = 0.0;
    for (std::size_t i = 0; i < stats.hvol.size(); ++i) {
        if (damping[i] == 0.0)
            throw DegenerateError("saturation value undefined for a zero damping factor");
        value = std::max(value, mean / (damping[i] * static_cast<double>(stats.hvol[i])));
    }
    return value;
}

/// Offset saturation: the shared base level d0 plus per-modality levels d_i.
struct SaturationLevels {
    double d0 = 0.0;
    std::vector<double> d;
};

inline SaturationLevels d0_sat_unequal(const BoundaryStats& stats, const DampingSpec& damping) {
    if (damping.size() != stats.hvol.size())
        throw SchemaError("expected one damping factor per modality");
    detail::require_positive_hvol(stats);
    const double mean = damping.mean();
    SaturationLevels levels;
    for (std::size_t i = 0; i < stats.hvol.size(); ++i)
        levels.d0 += (1.0 - damping[i]) / static_cast<double>(stats.hvol[i]);
    levels.d0 /= static_cast<double>(stats.hvol.size());
    levels.d.resize(stats.hvol.size());
    for (std::size_t i = 0; i < stats.hvol.size(); ++i)
        levels.d[i] = levels.d0 + mean / static_cast<double>(stats.hvol[i]);
    return levels;
}

inline SaturationLevels d0_sat_equal(const BoundaryStats& stats, double zeta) {
    DampingSpec damping;
    damping.zeta.assign(stats.hvol.size(), zeta);
    return d0_sat_unequal(stats, damping);
}

/**
 * One bound evaluation: identifier of the inequality, its right-hand
 * side, the observed outflow it is compared against, and whether the
 * inequality held within the numerical slack. Saturation fields are
 * filled where the bound uses them.
 */
struct BoundReport {
    std::string inequality;
    double bound = 0.0;
    double observed = 0.0;
    bool holds = false;
    std::optional<double> d_sat;
    std::optional<double> d0_sat;
    std::vector<double> d_modality;
};

enum class MumoBoundVariant { equal, equal_d0, unequal, unequal_d0 };

inline const char* variant_name(MumoBoundVariant variant) {
    switch (variant) {
        case MumoBoundVariant::equal: return "mumo_equal";
        case MumoBoundVariant::equal_d0: return "mumo_equal_refined";
        case MumoBoundVariant::unequal: return "mumo_unequal";
        case MumoBoundVariant::unequal_d0: return "mumo_unequal_refined";
    }
    throw SchemaError("unknown bound variant");
}

/**
 * Outflow bound for the multimodal ranking. The equal variants demand
 * identical damping factors. The coarse forms divide the (damped)
 * boundary weight by the smallest hypergraph volume; the refined (_d0)
 * forms weigh every crossing hyperedge by the saturation level of its
 * inside modalities.
 */
inline BoundReport bound_mumo(const BoundaryStats& stats, const DampingSpec& damping,
                              MumoBoundVariant variant, double observed) {
    if (damping.size() != stats.hvol.size())
        throw SchemaError("expected one damping factor per modality");
    damping.check();
    if ((variant == MumoBoundVariant::equal || variant == MumoBoundVariant::equal_d0) &&
        !damping.all_equal())
        throw SchemaError("equal-damping bound variant applied to unequal damping factors");
    detail::require_positive_hvol(stats);

    BoundReport report;
    report.inequality = variant_name(variant);
    report.observed = observed;

    const double min_hvol =
        static_cast<double>(*std::min_element(stats.hvol.begin(), stats.hvol.end()));
    switch (variant) {
        case MumoBoundVariant::equal:
            report.bound = (1.0 - damping[0]) * stats.boundary / min_hvol;
            report.d_sat = d_sat_equal(stats);
            break;
        case MumoBoundVariant::unequal:
            report.bound = stats.boundary_zeta / min_hvol;
            break;
        case MumoBoundVariant::equal_d0:
        case MumoBoundVariant::unequal_d0: {
            const SaturationLevels levels = d0_sat_unequal(stats, damping);
            const double inv_m = 1.0 / static_cast<double>(stats.modality_count);
            double bound = 0.0;
            for (std::size_t e = 0; e < stats.hyperedge_count; ++e) {
                const double outside =
                    static_cast<double>(stats.modality_count - stats.inside_count[e]);
                double damped = 0.0;
                for (std::size_t i = 0; i < stats.modality_count; ++i)
                    if (stats.inside_mask[e] >> i & 1)
                        damped += (1.0 - damping[i]) * levels.d[i];
                bound += outside * inv_m * damped;
            }
            report.bound = bound;
            report.d0_sat = levels.d0;
            report.d_modality = levels.d;
            break;
        }
    }
    report.holds = bound_holds(observed, report.bound);
    return report;
}

/**
 * The refined equal-damping bound in its factored form,
 * (1 - zeta) * sum_h (outside/M) * sum_{inside i} d_i. Algebraically
 * identical to bound_mumo with the equal_d0 variant; kept separate so
 * the two forms can be compared directly.
 */
inline double bound_mumo_equal_refined_factored(const BoundaryStats& stats, double zeta) {
    const SaturationLevels levels = d0_sat_equal(stats, zeta);
    const double inv_m = 1.0 / static_cast<double>(stats.modality_count);
    double total = 0.0;
    for (std::size_t e = 0; e < stats.hyperedge_count; ++e) {
        const double outside = static_cast<double>(stats.modality_count - stats.inside_count[e]);
        double level_sum = 0.0;
        for (std::size_t i = 0; i < stats.modality_count; ++i)
            if (stats.inside_mask[e] >> i & 1) level_sum += levels.d[i];
        total += outside * inv_m * level_sum;
    }
    return (1.0 - zeta) * total;
}

/**
 * Outflow bound on a plain directed graph: runs the personalized ranking
 * with a hub-preferring preference on U and compares zeta times the rank
 * mass outside U against (1 - zeta) |boundary(U)| / Vol(U). Guaranteed
 * for graphs whose links are bidirectional and free of dangling nodes.
 */
inline BoundReport bound_unimodal(const DirectedGraph& graph,
                                          const std::vector<std::uint32_t>& set, double zeta,
                                          const SolverConfig& config = {}) {
    const detail::DirectedCut cut = detail::directed_cut(graph, set);
    const auto s = build_preference_vector(graph, set, PreferenceMode::hub_preferring);
    const PageRankResult pr = unimodal_pagerank(graph, zeta, s, config);

    BoundReport report;
    report.inequality = "unimodal";
    report.bound =
        (1.0 - zeta) * static_cast<double>(cut.crossing) / static_cast<double>(cut.volume);
    report.observed = zeta * detail::mass_outside(pr.ranks, cut.member);
    report.d_sat = 1.0 / static_cast<double>(cut.volume);
    report.holds = bound_holds(report.observed, report.bound);
    return report;
}

/**
 * Same inequality for the lazy walk; the half-speed walk halves the
 * bound: zeta * outside mass <= (1 - zeta) |boundary(U)| / (2 Vol(U)).
 */
inline BoundReport bound_lazy(const DirectedGraph& graph,
                                      const std::vector<std::uint32_t>& set, double zeta,
                                      const SolverConfig& config = {}) {
    const detail::DirectedCut cut = detail::directed_cut(graph, set);
    const auto s = build_preference_vector(graph, set, PreferenceMode::hub_preferring);
    const PageRankResult pr = lazy_pagerank(graph, zeta, s, config);

    BoundReport report;
    report.inequality = "lazy";
    report.bound = (1.0 - zeta) * static_cast<double>(cut.crossing) /
                   (2.0 * static_cast<double>(cut.volume));
    report.observed = zeta * detail::mass_outside(pr.ranks, cut.member);
    report.d_sat = 1.0 / static_cast<double>(cut.volume);
    report.holds = bound_holds(report.observed, report.bound);
    return report;
}

/**
 * Bound evaluation for the coupled bipartite ranking. The two per-side
 * inequalities compare each side's damped outside mass against the
 * crossing edges feeding it; their sum is also evaluated as a combined
 * inequality, which unlike the per-side splits follows from flow
 * conservation alone.
 */
struct BipartiteBoundReport {
    BoundReport products;
    BoundReport clients;
    double combined_bound = 0.0;
    double combined_observed = 0.0;
    bool combined_holds = false;
};

inline BipartiteBoundReport bound_bipartite(const BipartiteGraph& graph,
                                                    const std::vector<std::uint32_t>& client_set,
                                                    const std::vector<std::uint32_t>& product_set,
                                                    double zeta_kp, double zeta_pk,
                                                    const SolverConfig& config = {}) {
    std::vector<char> in_k(graph.client_count(), 0), in_p(graph.product_count(), 0);
    std::int64_t vol_k = 0, vol_p = 0;
    for (std::uint32_t k : client_set) {
        if (k >= graph.client_count()) throw LookupError("client index out of range");
        if (!in_k[k]) vol_k += static_cast<std::int64_t>(graph.client_degree(k));
        in_k[k] = 1;
    }
    for (std::uint32_t p : product_set) {
        if (p >= graph.product_count()) throw LookupError("product index out of range");
        if (!in_p[p]) vol_p += static_cast<std::int64_t>(graph.product_degree(p));
        in_p[p] = 1;
    }
    if (vol_k == 0 || vol_p == 0) throw DegenerateError("preferred set has zero volume");
    const double min_vol = static_cast<double>(std::min(vol_k, vol_p));

    // Crossing edges, counted once per incidence: from preferred clients
    // to outside products, and from preferred products to outside clients.
    std::int64_t cross_kp = 0, cross_pk = 0;
    for (std::uint32_t k = 0; k < graph.client_count(); ++k) {
        if (!in_k[k]) continue;
        for (std::uint32_t p : graph.products_of(k))
            if (!in_p[p]) ++cross_kp;
    }
    for (std::uint32_t p = 0; p < graph.product_count(); ++p) {
        if (!in_p[p]) continue;
        for (std::uint32_t k : graph.clients_of(p))
            if (!in_k[k]) ++cross_pk;
    }

    const auto s_k = build_client_preference(graph, client_set, PreferenceMode::hub_preferring);
    const auto s_p = build_product_preference(graph, product_set, PreferenceMode::hub_preferring);
    const BipartitePageRankResult pr =
        bipartite_pagerank(graph, zeta_kp, zeta_pk, s_p, s_k, config);

    const double out_p = detail::mass_outside(pr.products, in_p);
    const double out_k = detail::mass_outside(pr.clients, in_k);

    BipartiteBoundReport report;
    report.products.inequality = "bipartite_products";
    report.products.bound = (1.0 - zeta_kp) * static_cast<double>(cross_kp) / min_vol;
    report.products.observed = zeta_kp * out_p;
    report.products.d_sat = 1.0 / min_vol;
    report.products.holds = bound_holds(report.products.observed, report.products.bound);

    report.clients.inequality = "bipartite_clients";
    report.clients.bound = (1.0 - zeta_pk) * static_cast<double>(cross_pk) / min_vol;
    report.clients.observed = zeta_pk * out_k;
    report.clients.d_sat = 1.0 / min_vol;
    report.clients.holds = bound_holds(report.clients.observed, report.clients.bound);

    report.combined_bound = report.products.bound + report.clients.bound;
    report.combined_observed = report.products.observed + report.clients.observed;
    report.combined_holds = bound_holds(report.combined_observed, report.combined_bound);
    return report;
}

} // namespace mumorank
