#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mumorank;

namespace {

testsupport::ReviewCase& review() {
    static testsupport::ReviewCase instance = testsupport::load_review_case();
    return instance;
}

} // namespace

TEST(SplitMix64, KnownStream) {
    // Reference values for seed 1234567 from the published algorithm.
    detail::SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 6457827717110365317ULL);
    EXPECT_EQ(rng.next(), 3203168211198807973ULL);
    EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(SplitMix64, BoundedStaysInRange) {
    detail::SplitMix64 rng(99);
    std::vector<std::uint64_t> hits(7, 0);
    for (int i = 0; i < 70000; ++i) ++hits[rng.bounded(7)];
    for (std::uint64_t h : hits) {
        EXPECT_GT(h, 9000u);
        EXPECT_LT(h, 11000u);
    }
}

TEST(SplitMix64, UnitWithinHalfOpenInterval) {
    detail::SplitMix64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.unit();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(SampleCdf, SkipsZeroMassEntries) {
    const std::vector<double> cdf = {0.0, 0.5, 0.5, 1.0};
    EXPECT_EQ(detail::sample_cdf(cdf, 0.0), 1u);
    EXPECT_EQ(detail::sample_cdf(cdf, 0.25), 1u);
    EXPECT_EQ(detail::sample_cdf(cdf, 0.75), 3u);
    EXPECT_EQ(detail::sample_cdf(cdf, 0.999999), 3u);
}

TEST(WalkConfig, ForCountedStepsAddsTenPercentBurnIn) {
    const auto config = WalkConfig::for_counted_steps(1000000, 7);
    EXPECT_EQ(config.burn_in, 100000u);
    EXPECT_EQ(config.total_steps, 1100000u);
    EXPECT_EQ(config.master_seed, 7u);
}

TEST(WalkConfig, Validation) {
    WalkConfig config;
    config.total_steps = 0;
    EXPECT_THROW(config.check(), SchemaError);
    config.total_steps = 10;
    config.burn_in = 10;
    EXPECT_THROW(config.check(), SchemaError);
    config.burn_in = 5;
    config.walkers = 0;
    EXPECT_THROW(config.check(), SchemaError);
}

TEST(Walker, ApproachesSolverDistribution) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto analytic = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    const auto config = WalkConfig::for_counted_steps(2000000, 42);
    const auto sim = simulate(rc.graph, rc.bound.damping, s, config);
    const auto deviation = compare(sim.distribution, analytic.ranks.nodes);
    EXPECT_LT(deviation.max_abs, 0.01);
    EXPECT_EQ(sim.counted_steps, 2000000u);
}

TEST(Walker, DeterministicForFixedSeed) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto config = WalkConfig::for_counted_steps(200000, 42);
    const auto first = simulate(rc.graph, rc.bound.damping, s, config);
    const auto second = simulate(rc.graph, rc.bound.damping, s, config);
    EXPECT_EQ(first.counts, second.counts);

    const auto other = simulate(rc.graph, rc.bound.damping, s,
                                WalkConfig::for_counted_steps(200000, 43));
    EXPECT_NE(first.counts, other.counts);
}

TEST(Walker, WalkerSplitDoesNotChangeTotals) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    auto config = WalkConfig::for_counted_steps(100001, 42);
    config.walkers = 7; // uneven split across walkers
    const auto sim = simulate(rc.graph, rc.bound.damping, s, config);
    std::uint64_t total = 0;
    for (const auto& modality : sim.counts)
        for (std::uint64_t c : modality) total += c;
    EXPECT_EQ(total, sim.counted_steps);
}

TEST(Walker, ZeroDegreeNodeIsNeverVisited) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto sim = simulate(rc.graph, rc.bound.damping, s,
                              WalkConfig::for_counted_steps(100000, 5));
    const auto tags = rc.graph.schema().index_of("tags");
    const auto pretty = rc.graph.node_index(tags, "pretty");
    EXPECT_EQ(sim.counts[tags][pretty], 0u);
}

TEST(Compare, ShapeMismatchRejected) {
    ModalityVectors a = {{0.5, 0.5}};
    ModalityVectors b = {{0.5, 0.25, 0.25}};
    EXPECT_THROW(compare(a, b), SchemaError);
    ModalityVectors c = {{0.5, 0.5}, {1.0}};
    EXPECT_THROW(compare(a, c), SchemaError);
}
