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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include <mumorank/errors.hpp>
#include <mumorank/hypergraph.hpp>
#include <mumorank/solver.hpp>
#include <mumorank/types.hpp>

namespace mumorank {

namespace detail {

/**
 * SplitMix64 stream. All sampling goes through this generator so that a
 * simulation is reproducible bit for bit across platforms and thread
 * counts; nothing from <random> is used because its distributions are
 * implementation-defined.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from {0, ..., n - 1}.
    std::uint64_t bounded(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// First index j with cdf[j] > u; entries with zero mass are never hit.
inline std::uint32_t sample_cdf(const std::vector<double>& cdf, double u) {
    const double target = u * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    if (it == cdf.end()) --it;
    return static_cast<std::uint32_t>(it - cdf.begin());
}

} // namespace detail

/**
 * Monte Carlo run layout. total_steps includes the discarded burn-in;
 * only the remaining steps are counted. The walk is split over
 * independent walkers whose random streams derive deterministically
 * from the master seed, so results do not depend on thread count.
 */
struct WalkConfig {
    std::uint64_t total_steps = 1100000;
    std::uint64_t burn_in = 100000;
    std::uint64_t master_seed = 42;
    std::uint32_t walkers = 64;

    /// total counted steps plus a 10% burn-in on top.
    static WalkConfig for_counted_steps(std::uint64_t counted, std::uint64_t seed) {
        WalkConfig config;
        config.burn_in = counted / 10;
        config.total_steps = counted + config.burn_in;
        config.master_seed = seed;
        return config;
    }

    void check() const {
        if (total_steps == 0) throw SchemaError("total_steps must be positive");
        if (burn_in >= total_steps) throw SchemaError("burn_in must be below total_steps");
        if (walkers == 0) throw SchemaError("walkers must be positive");
    }
};

struct SimulationResult {
    /// Per-modality visit counts over the counted steps.
    std::vector<std::vector<std::uint64_t>> counts;
    /// Counts normalized within each modality.
    ModalityVectors distribution;
    std::uint64_t counted_steps = 0;
};

/**
 * Simulates the random surfer whose stationary distribution, conditioned
 * on each modality, is the mumorank fixed point. At a node of modality i
 * the surfer teleports with probability zeta_i (uniform modality choice,
 * then a node drawn from that modality's preference vector); otherwise
 * it moves to a uniformly chosen incident hyperedge and then to a
 * uniformly chosen member of that hyperedge, possibly itself.
 */
inline SimulationResult simulate(const MultimodalHypergraph& graph, const DampingSpec& damping,
                                 const ModalityVectors& s, const WalkConfig& config) {
    detail::check_mumo_inputs(graph, damping, s);
    config.check();
    const std::size_t m_count = graph.modality_count();

    std::vector<std::vector<double>> cdf(m_count);
    for (std::size_t i = 0; i < m_count; ++i) {
        cdf[i].resize(s[i].size());
        double running = 0.0;
        for (std::size_t j = 0; j < s[i].size(); ++j) {
            running += s[i][j];
            cdf[i][j] = running;
        }
    }

    const std::uint64_t counted = config.total_steps - config.burn_in;
    const std::uint32_t walkers = config.walkers;
    detail::SplitMix64 seeder(config.master_seed);
    std::vector<std::uint64_t> walker_seed(walkers);
    for (std::uint32_t w = 0; w < walkers; ++w) walker_seed[w] = seeder.next();

    std::vector<std::vector<std::vector<std::uint64_t>>> local(walkers);
    const auto run_walker = [&](std::uint32_t w) {
        auto& counts = local[w];
        counts.resize(m_count);
        for (std::size_t i = 0; i < m_count; ++i) counts[i].assign(graph.node_count(i), 0);

        const std::uint64_t my_counted = counted / walkers + (w < counted % walkers ? 1 : 0);
        const std::uint64_t my_burn = config.burn_in / walkers;
        detail::SplitMix64 rng(walker_seed[w]);

        auto modality = static_cast<std::size_t>(rng.bounded(m_count));
        std::uint32_t node = detail::sample_cdf(cdf[modality], rng.unit());
        for (std::uint64_t step = 0; step < my_burn + my_counted; ++step) {
            if (rng.unit() < damping[modality]) {
                modality = static_cast<std::size_t>(rng.bounded(m_count));
                node = detail::sample_cdf(cdf[modality], rng.unit());
            } else {
                const auto& incident = graph.incident_hyperedges(modality, node);
                const auto& edge =
                    graph.hyperedge(incident[rng.bounded(incident.size())]);
                modality = static_cast<std::size_t>(rng.bounded(m_count));
                node = edge[modality];
            }
            if (step >= my_burn) ++counts[modality][node];
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned thread_count = std::min<unsigned>(hw, walkers);
    if (thread_count <= 1) {
        for (std::uint32_t w = 0; w < walkers; ++w) run_walker(w);
    } else {
        std::atomic<std::uint32_t> next_walker{0};
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t)
            pool.emplace_back([&] {
                for (std::uint32_t w = next_walker.fetch_add(1); w < walkers;
                     w = next_walker.fetch_add(1))
                    run_walker(w);
            });
        for (auto& thread : pool) thread.join();
    }

    SimulationResult result;
    result.counted_steps = counted;
    result.counts.resize(m_count);
    for (std::size_t i = 0; i < m_count; ++i) result.counts[i].assign(graph.node_count(i), 0);
    for (std::uint32_t w = 0; w < walkers; ++w)
        for (std::size_t i = 0; i < m_count; ++i)
            for (std::size_t j = 0; j < result.counts[i].size(); ++j)
                result.counts[i][j] += local[w][i][j];

    result.distribution.resize(m_count);
    for (std::size_t i = 0; i < m_count; ++i) {
        std::uint64_t total = 0;
        for (std::uint64_t c : result.counts[i]) total += c;
        result.distribution[i].assign(result.counts[i].size(), 0.0);
        if (total > 0)
            for (std::size_t j = 0; j < result.counts[i].size(); ++j)
                result.distribution[i][j] =
                    static_cast<double>(result.counts[i][j]) / static_cast<double>(total);
    }
    return result;
}

/// Elementwise comparison of an empirical distribution with solver ranks.
struct DeviationReport {
    double max_abs = 0.0;
    std::vector<double> l1_per_modality;
};

inline DeviationReport compare(const ModalityVectors& empirical, const ModalityVectors& analytic) {
    if (empirical.size() != analytic.size())
        throw SchemaError("distribution shapes do not match");
    DeviationReport report;
    report.l1_per_modality.resize(empirical.size(), 0.0);
    for (std::size_t i = 0; i < empirical.size(); ++i) {
        if (empirical[i].size() != analytic[i].size())
            throw SchemaError("distribution shapes do not match");
        for (std::size_t j = 0; j < empirical[i].size(); ++j) {
            const double diff = std::abs(empirical[i][j] - analytic[i][j]);
            report.max_abs = std::max(report.max_abs, diff);
            report.l1_per_modality[i] += diff;
        }
    }
    return report;
}

} // namespace mumorank
