#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mumorank;

namespace {

testsupport::ReviewCase& review() {
    static testsupport::ReviewCase instance = testsupport::load_review_case();
    return instance;
}

std::pair<std::size_t, std::uint32_t> locate(const MultimodalHypergraph& graph,
                                             const std::string& modality,
                                             const std::string& label) {
    const auto m = graph.schema().index_of(modality);
    return {m, graph.node_index(m, label)};
}

PreferenceSpec hub_full(const MultimodalHypergraph& graph) {
    PreferenceSpec spec;
    spec.sets = testsupport::full_sets(graph);
    spec.mode = PreferenceMode::hub_preferring;
    return spec;
}

} // namespace

TEST(MumoRank, ReproducesReviewScenario) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto result = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    for (const auto& expected : testsupport::expected_review_ranks()) {
        const auto [m, j] = locate(rc.graph, expected.modality, expected.label);
        EXPECT_NEAR(result.ranks.nodes[m][j], expected.value, 1e-9)
            << expected.modality << "/" << expected.label;
    }
    EXPECT_LT(result.residual, 1e-12);
    EXPECT_LT(result.max_drift, 1e-12);
}

TEST(MumoRank, PerModalityMassIsOne) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto result = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    for (const auto& ranks : result.ranks.nodes) {
        double sum = 0.0;
        for (double v : ranks) sum += v;
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(MumoRank, HyperedgeMassMatchesDampingComplement) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto result = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    double expected = 0.0;
    for (std::size_t i = 0; i < rc.bound.damping.size(); ++i)
        expected += 1.0 - rc.bound.damping[i];
    double sum = 0.0;
    for (double v : result.ranks.hyperedges) sum += v;
    EXPECT_NEAR(sum, expected, 1e-12);
}

TEST(MumoRank, MatchesDenseSolve) {
    testsupport::SplitMix64 rng(21);
    for (int round = 0; round < 10; ++round) {
        const auto graph = testsupport::random_hypergraph(rng, 2 + rng.bounded(3), 8, 20);
        const auto damping = testsupport::random_damping(rng, graph.schema().size());
        const auto s = build_preference_vector(graph, hub_full(graph));
        const auto iterative = mumorank::mumorank(graph, damping, s);
        const auto dense = testsupport::dense_mumorank(graph, damping, s);
        EXPECT_LT(testsupport::max_abs_diff(iterative.ranks.nodes, dense), 1e-10);
    }
}

TEST(MumoRank, FixedPointSurvivesOneStep) {
    // Applying one more sweep to a converged solution must not move it.
    testsupport::SplitMix64 rng(22);
    for (int round = 0; round < 10; ++round) {
        const auto graph = testsupport::random_hypergraph(rng, 2 + rng.bounded(3), 8, 20);
        const auto damping = testsupport::random_damping(rng, graph.schema().size());
        const auto s = build_preference_vector(graph, hub_full(graph));
        const auto result = mumorank::mumorank(graph, damping, s);
        const auto stepped = mumorank_step(graph, damping, s, result.ranks);
        EXPECT_LT(testsupport::max_abs_diff(stepped.nodes, result.ranks.nodes), 1e-11);
    }
}

TEST(MumoRank, DegreeProportionalInitConvergesToSameFixedPoint) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    SolverConfig config;
    config.initialization = SolverConfig::Init::degree_proportional;
    const auto seeded = mumorank::mumorank(rc.graph, rc.bound.damping, s, config);
    const auto plain = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    EXPECT_LT(testsupport::max_abs_diff(seeded.ranks.nodes, plain.ranks.nodes), 1e-10);
}

TEST(MumoRank, ZeroDegreeNodeKeepsRankZero) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto result = mumorank::mumorank(rc.graph, rc.bound.damping, s);
    const auto [m, j] = locate(rc.graph, "tags", "pretty");
    EXPECT_EQ(result.ranks.nodes[m][j], 0.0);
}

TEST(MumoRank, PreferenceMassOnZeroDegreeNodeRejected) {
    auto& rc = review();
    auto s = build_preference_vector(rc.graph, rc.bound.preference);
    const auto [mp, jp] = locate(rc.graph, "tags", "pretty");
    const auto [mb, jb] = locate(rc.graph, "tags", "beautiful");
    s[mp][jp] = s[mb][jb];
    s[mb][jb] = 0.0;
    EXPECT_THROW(mumorank::mumorank(rc.graph, rc.bound.damping, s), DegenerateError);
}

TEST(MumoRank, ShapeMismatchesRejected) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    DampingSpec short_spec;
    short_spec.zeta = {0.3, 0.2};
    EXPECT_THROW(mumorank::mumorank(rc.graph, short_spec, s), SchemaError);

    auto bad_s = s;
    bad_s[0].pop_back();
    EXPECT_THROW(mumorank::mumorank(rc.graph, rc.bound.damping, bad_s), SchemaError);

    auto unnormalized = s;
    unnormalized[0][0] += 0.25;
    EXPECT_THROW(mumorank::mumorank(rc.graph, rc.bound.damping, unnormalized), SchemaError);
}

TEST(MumoRank, NonConvergenceCarriesDiagnostics) {
    auto& rc = review();
    const auto s = build_preference_vector(rc.graph, rc.bound.preference);
    SolverConfig config;
    config.tolerance = 1e-30;
    config.max_iterations = 4;
    try {
        mumorank::mumorank(rc.graph, rc.bound.damping, s, config);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& error) {
        EXPECT_EQ(error.iterations, 4u);
        EXPECT_GT(error.residual, 0.0);
    }
}
