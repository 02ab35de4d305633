#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mumorank;

TEST(Preference, HubPreferringReviewScenario) {
    const auto review = testsupport::load_review_case();
    const auto s = build_preference_vector(review.graph, review.bound.preference);

    const auto& graph = review.graph;
    EXPECT_DOUBLE_EQ(s[0][*graph.find_node(0, "Eva")], 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(s[0][*graph.find_node(0, "Mary")], 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(s[0][*graph.find_node(0, "Henry")], 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(s[0][*graph.find_node(0, "Bob")], 0.0);
    EXPECT_DOUBLE_EQ(s[1][*graph.find_node(1, "Laptop")], 5.0 / 9.0);
    EXPECT_DOUBLE_EQ(s[1][*graph.find_node(1, "Netbook")], 4.0 / 9.0);
    EXPECT_DOUBLE_EQ(s[2][*graph.find_node(2, "beautiful")], 5.0 / 11.0);
    EXPECT_DOUBLE_EQ(s[2][*graph.find_node(2, "awful")], 6.0 / 11.0);

    for (std::size_t i = 0; i < s.size(); ++i) {
        double sum = 0.0;
        for (double v : s[i]) sum += v;
        EXPECT_NEAR(sum, 1.0, 1e-15);
    }
}

TEST(Preference, UniformMode) {
    const auto review = testsupport::load_review_case();
    PreferenceSpec spec = review.bound.preference;
    spec.mode = PreferenceMode::uniform;
    const auto s = build_preference_vector(review.graph, spec);
    EXPECT_DOUBLE_EQ(s[0][*review.graph.find_node(0, "Eva")], 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(s[1][*review.graph.find_node(1, "Laptop")], 0.5);
    EXPECT_DOUBLE_EQ(s[1][*review.graph.find_node(1, "Netbook")], 0.5);
    EXPECT_DOUBLE_EQ(s[2][*review.graph.find_node(2, "beautiful")], 0.5);
}

TEST(Preference, EmptySetRejected) {
    const auto review = testsupport::load_review_case();
    PreferenceSpec spec = review.bound.preference;
    spec.sets[1].clear();
    EXPECT_THROW(build_preference_vector(review.graph, spec), DegenerateError);
}

TEST(Preference, ZeroDegreeSetRejectedInHubMode) {
    const auto review = testsupport::load_review_case();
    PreferenceSpec spec;
    spec.mode = PreferenceMode::hub_preferring;
    spec.sets = resolve_sets(review.graph, {{"Eva"}, {"Laptop"}, {"pretty"}});
    EXPECT_THROW(build_preference_vector(review.graph, spec), DegenerateError);

    spec.mode = PreferenceMode::uniform;
    const auto s = build_preference_vector(review.graph, spec);
    EXPECT_DOUBLE_EQ(s[2][*review.graph.find_node(2, "pretty")], 1.0);
}

TEST(Preference, ZeroDegreeMemberGetsNoMassInHubMode) {
    const auto review = testsupport::load_review_case();
    PreferenceSpec spec;
    spec.mode = PreferenceMode::hub_preferring;
    spec.sets = resolve_sets(review.graph, {{"Eva"}, {"Laptop"}, {"pretty", "beautiful"}});
    const auto s = build_preference_vector(review.graph, spec);
    EXPECT_DOUBLE_EQ(s[2][*review.graph.find_node(2, "pretty")], 0.0);
    EXPECT_DOUBLE_EQ(s[2][*review.graph.find_node(2, "beautiful")], 1.0);
}

TEST(Preference, UnknownLabelRejected) {
    const auto review = testsupport::load_review_case();
    EXPECT_THROW(resolve_sets(review.graph, {{"Eva"}, {"Walkman"}, {"awful"}}), LookupError);
}

TEST(Damping, Validation) {
    DampingSpec damping;
    damping.zeta = {0.3, 0.2, 0.1};
    EXPECT_NO_THROW(damping.check());
    EXPECT_NEAR(damping.mean(), 0.2, 1e-15);
    EXPECT_FALSE(damping.all_equal());

    DampingSpec equal;
    equal.zeta = {0.25, 0.25};
    EXPECT_TRUE(equal.all_equal());

    DampingSpec bad;
    bad.zeta = {1.2};
    EXPECT_THROW(bad.check(), SchemaError);
    DampingSpec empty;
    EXPECT_THROW(empty.check(), SchemaError);
}
