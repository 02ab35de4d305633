#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mumorank;

namespace {

HypergraphInput tiny_input() {
    ModalitySchema schema{{"users", "products", "tags"}};
    HypergraphInput input(schema);
    input.add_row({"alice", "laptop", "nice"});
    input.add_row({"bob", "laptop", "slow"});
    input.add_row({"alice", "phone", "nice"});
    return input;
}

} // namespace

TEST(Hypergraph, ReviewTableDegrees) {
    const auto review = testsupport::load_review_case();
    const auto& graph = review.graph;
    const std::vector<std::pair<const char*, std::size_t>> expected = {
        {"Eva", 4},     {"Mary", 4},  {"Bob", 2},      {"John", 2},  {"Jane", 4},
        {"Ann", 2},     {"Henry", 4}, {"Max", 2},      {"TVset", 3}, {"VideoPlayer", 5},
        {"Laptop", 5},  {"DVDPlayer", 4}, {"Smartphone", 3}, {"Netbook", 4},
        {"handsome", 5}, {"welldesigned", 5}, {"beautiful", 5}, {"pretty", 0},
        {"annoying", 1}, {"awful", 6}, {"worthless", 2},
    };
    for (const auto& [label, degree] : expected) {
        bool found = false;
        for (std::size_t i = 0; i < graph.modality_count(); ++i) {
            if (auto j = graph.find_node(i, label)) {
                EXPECT_EQ(graph.degree(i, *j), degree) << label;
                found = true;
            }
        }
        EXPECT_TRUE(found) << label;
    }
    EXPECT_EQ(graph.hyperedge_count(), 24u);
    EXPECT_EQ(graph.node_count(0), 8u);
    EXPECT_EQ(graph.node_count(1), 6u);
    EXPECT_EQ(graph.node_count(2), 7u);
}

TEST(Hypergraph, DegreeByNodeRef) {
    const auto review = testsupport::load_review_case();
    EXPECT_EQ(review.graph.degree(NodeRef{0, "Eva"}), 4u);
    EXPECT_EQ(review.graph.degree(NodeRef{2, "awful"}), 6u);
    EXPECT_THROW(review.graph.degree(NodeRef{0, "eva"}), LookupError);
    EXPECT_THROW(review.graph.degree(NodeRef{9, "Eva"}), LookupError);
}

TEST(Hypergraph, ModalityDegreeSumEqualsHyperedgeCount) {
    const auto review = testsupport::load_review_case();
    for (std::size_t i = 0; i < review.graph.modality_count(); ++i)
        EXPECT_EQ(review.graph.modality_degree_sum(i), review.graph.hyperedge_count());
    EXPECT_THROW(review.graph.modality_degree_sum(3), LookupError);

    testsupport::SplitMix64 rng(2026);
    for (int round = 0; round < 10; ++round) {
        const auto graph = testsupport::random_hypergraph(rng, 2 + rng.bounded(3), 6, 20);
        for (std::size_t i = 0; i < graph.modality_count(); ++i)
            EXPECT_EQ(graph.modality_degree_sum(i), graph.hyperedge_count());
    }
}

TEST(Hypergraph, IncidentHyperedgesInInputOrder) {
    const auto input = tiny_input();
    const MultimodalHypergraph graph(input);
    const auto alice = *graph.find_node(0, "alice");
    const auto laptop = *graph.find_node(1, "laptop");
    EXPECT_EQ(graph.incident_hyperedges(0, alice), (std::vector<std::uint32_t>{0, 2}));
    EXPECT_EQ(graph.incident_hyperedges(1, laptop), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Hypergraph, LabelsAreCaseSensitive) {
    ModalitySchema schema{{"a", "b"}};
    HypergraphInput input(schema);
    input.add_row({"Node", "x"});
    input.add_row({"node", "x"});
    const MultimodalHypergraph graph(input);
    EXPECT_EQ(graph.node_count(0), 2u);
    EXPECT_NE(graph.find_node(0, "Node"), graph.find_node(0, "node"));
}

TEST(Validate, AcceptsReviewTable) {
    const auto table =
        parse_hyperedge_csv(read_file(testsupport::data_path("product_tags.csv")));
    const auto input = build_hypergraph(table, {}, false);
    EXPECT_TRUE(validate(input).empty());
}

TEST(Validate, ReportsWrongCardinality) {
    ModalitySchema schema{{"users", "products", "tags"}};
    HypergraphInput input(schema);
    input.add_hyperedge({{0, "alice"}, {0, "bob"}});
    const auto violations = validate(input);
    ASSERT_EQ(violations.size(), 1u);
    EXPECT_NE(violations[0].find("cardinality 2 != 3"), std::string::npos);
}

TEST(Validate, ReportsModalityMultiplicity) {
    ModalitySchema schema{{"users", "products", "tags"}};
    HypergraphInput input(schema);
    input.add_hyperedge({{0, "alice"}, {0, "bob"}, {1, "laptop"}});
    const auto violations = validate(input);
    ASSERT_EQ(violations.size(), 2u);
    EXPECT_NE(violations[0].find("'users' appears 2 times"), std::string::npos);
    EXPECT_NE(violations[1].find("'tags' appears 0 times"), std::string::npos);
}

TEST(Validate, ReportsUndeclaredNode) {
    ModalitySchema schema{{"users", "products"}};
    HypergraphInput input(schema, false, /*closed_universe=*/true);
    input.declare_node(0, "alice");
    input.declare_node(1, "laptop");
    input.add_row({"alice", "laptop"});
    input.add_row({"mallory", "laptop"});
    const auto violations = validate(input);
    ASSERT_EQ(violations.size(), 1u);
    EXPECT_NE(violations[0].find("'mallory' not declared in modality 'users'"),
              std::string::npos);
}

TEST(Validate, ReportsDuplicateHyperedges) {
    ModalitySchema schema{{"users", "products"}};
    HypergraphInput duplicated(schema);
    duplicated.add_row({"alice", "laptop"});
    duplicated.add_row({"alice", "laptop"});
    const auto violations = validate(duplicated);
    ASSERT_EQ(violations.size(), 1u);
    EXPECT_NE(violations[0].find("hyperedge 1: duplicate of hyperedge 0"), std::string::npos);

    HypergraphInput allowed(schema, /*multiplicity_allowed=*/true);
    allowed.add_row({"alice", "laptop"});
    allowed.add_row({"alice", "laptop"});
    EXPECT_TRUE(validate(allowed).empty());
    const MultimodalHypergraph graph(allowed);
    EXPECT_EQ(graph.degree(0, *graph.find_node(0, "alice")), 2u);
}

TEST(Validate, ReportsTooFewModalities) {
    ModalitySchema schema{{"only"}};
    HypergraphInput input(schema);
    const auto violations = validate(input);
    ASSERT_EQ(violations.size(), 1u);
    EXPECT_NE(violations[0].find("modality count 1"), std::string::npos);
}

TEST(Validate, ReportsDuplicateModalityNames) {
    ModalitySchema schema{{"users", "users"}};
    HypergraphInput input(schema);
    const auto violations = validate(input);
    ASSERT_EQ(violations.size(), 1u);
    EXPECT_NE(violations[0].find("duplicate modality name 'users'"), std::string::npos);
}

TEST(Validate, ConstructionRejectsInvalidInput) {
    ModalitySchema schema{{"users", "products", "tags"}};
    HypergraphInput input(schema);
    input.add_hyperedge({{0, "alice"}, {1, "laptop"}});
    EXPECT_THROW(MultimodalHypergraph{input}, ValidationError);
}

TEST(GeneralizedView, PrunesZeroDegreeNodes) {
    const auto review = testsupport::load_review_case();
    const auto view = generalized_view(review.graph);
    EXPECT_EQ(view.active_count(0), 8u);
    EXPECT_EQ(view.active_count(1), 6u);
    EXPECT_EQ(view.active_count(2), 6u);
    EXPECT_EQ(view.pruned_total(), 1u);
    const auto pretty = *review.graph.find_node(2, "pretty");
    ASSERT_EQ(view.pruned(2).size(), 1u);
    EXPECT_EQ(view.pruned(2)[0], pretty);
    EXPECT_FALSE(view.is_active(2, pretty));
    EXPECT_EQ(view.generalized_node_count(), 8u + 6u + 6u + 24u);
}

TEST(GeneralizedView, IdempotentOnActiveGraphs) {
    const auto table =
        parse_hyperedge_csv(read_file(testsupport::data_path("product_tags.csv")));
    const MultimodalHypergraph graph{build_hypergraph(table, {}, false)};
    const auto view = generalized_view(graph);
    EXPECT_EQ(view.pruned_total(), 0u);
    std::size_t nodes = 0;
    for (std::size_t i = 0; i < graph.modality_count(); ++i) nodes += graph.node_count(i);
    EXPECT_EQ(view.generalized_node_count(), nodes + graph.hyperedge_count());
}
