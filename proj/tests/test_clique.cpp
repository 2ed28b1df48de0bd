#include <gtest/gtest.h>

#include <random>

#include "bitab/clique.hpp"
#include "bitab/oracle.hpp"
#include "test_support.hpp"

using namespace bitab;

TEST(RestrictedVab, Build) {
    const auto t = build_restricted_vab(test::k3(), 3);
    EXPECT_EQ(t.width(), 2);
    EXPECT_EQ(std::vector<int>(t.restriction(1).begin(), t.restriction(1).end()), (std::vector<int>{2, 3}));

    const auto e3 = build_restricted_vab(test::data_graph("example3.txt"), 3);
    EXPECT_EQ(std::vector<int>(e3.restriction(1).begin(), e3.restriction(1).end()), (std::vector<int>{5, 6}));
    EXPECT_EQ(e3.restriction(5).size(), 1U);

    EXPECT_THROW(build_restricted_vab(test::k3(), 1), std::invalid_argument);
    EXPECT_THROW(build_restricted_vab(test::k3(), 4), std::invalid_argument);
}

TEST(RestrictedKey, K3Block) {
    const OrderKey key = restricted_order_key(build_restricted_vab(test::k3(), 3));
    // Rows [2,3], [1,3], [1,2] over m = 1..3.
    EXPECT_EQ(key.at(1, 1), 0);
    EXPECT_EQ(key.at(2, 1), 1);
    EXPECT_EQ(key.at(3, 1), 2);
    EXPECT_EQ(key.at(1, 2), 1);
    EXPECT_EQ(key.at(3, 2), 4);
    EXPECT_EQ(key.at(3, 3), 6);
}

TEST(RestrictedKey, Example3AfterSwappingOneAndFour) {
    const Graph g = test::data_graph("example3.txt");
    const Vab t = act_vab(build_vab(g), 1, 4);
    const OrderKey key = restricted_order_key(t, 4);
    EXPECT_EQ(key.at(1, 1), 0);
    EXPECT_EQ(key.at(2, 1), 1);
    EXPECT_EQ(key.at(3, 1), 2);
    EXPECT_EQ(key.at(2, 2), 2);
    EXPECT_EQ(key.at(3, 3), 6);
}

TEST(RestrictedKey, FrozenBlocksAndBound) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = 2 + static_cast<int>(rng() % 7);
        const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
        const Graph g = graph_from_code(p, rng() & ((std::uint64_t{1} << pair_count(p)) - 1));
        const OrderKey key = restricted_order_key(build_vab(g), k);
        for (int n = k + 1; n <= p; ++n)
            for (int m = 1; m <= p; ++m) ASSERT_EQ(key.at(m, n), key.at(m, k));
        ASSERT_LE(key.at(p, k), k * (k - 1));
    }
}

TEST(RestrictedStandardize, CompleteGraphNeedsNoTranspositions) {
    for (int k = 2; k <= 6; ++k) {
        std::vector<Edge> edges;
        for (int u = 1; u <= k; ++u)
            for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
        const Graph g(k, edges);
        const auto r = restricted_standardize(g, k);
        EXPECT_EQ(r.steps, 0);
        EXPECT_TRUE(leading_clique_check(r.tableau));
    }
}

TEST(RestrictedStandardize, StarIsDegreeFiltered) {
    const Graph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    const auto r = restricted_standardize(star, 3);
    EXPECT_TRUE(r.degree_filtered);
    EXPECT_EQ(r.steps, 0);
    EXPECT_EQ(find_k_clique(star, 3).kind, CliqueKind::NotFound);
    EXPECT_EQ(vertices_with_degree_at_least(star, 2), 1);
}

TEST(LeadingCliqueCheck, Examples) {
    EXPECT_TRUE(leading_clique_check(build_restricted_vab(test::k3(), 3)));
    EXPECT_FALSE(leading_clique_check(build_restricted_vab(test::p3(), 3)));
    EXPECT_TRUE(leading_clique_check(build_restricted_vab(test::k4(), 3)));
    // Triangle on 1..3 plus a pendant vertex on 1.
    EXPECT_TRUE(leading_clique_check(build_restricted_vab(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}), 3)));
    EXPECT_FALSE(leading_clique_check(build_restricted_vab(Graph(4, {{1, 4}, {2, 4}, {1, 2}}), 3)));
}

TEST(FindKClique, Examples) {
    const auto e3 = find_k_clique(test::data_graph("example3.txt"), 3);
    ASSERT_EQ(e3.kind, CliqueKind::Found);
    EXPECT_EQ(format_witness(e3.vertices), "2 3 4");

    const auto k4 = find_k_clique(test::k4(), 4);
    ASSERT_EQ(k4.kind, CliqueKind::Found);
    EXPECT_EQ(format_witness(k4.vertices), "1 2 3 4");

    EXPECT_NE(find_k_clique(test::c5(), 3).kind, CliqueKind::Found);
    EXPECT_EQ(find_k_clique(test::c5(), 4).kind, CliqueKind::NotFound);
    EXPECT_THROW(find_k_clique(test::k3(), 4), std::invalid_argument);
}

// Found always carries a real clique; NotFound only when none exists.
TEST(FindKClique, SoundAgainstSubsetSearchUpToSix) {
    for (int p = 2; p <= 6; ++p)
        for (const Graph& g : enumerate_labeled_graphs(p))
            for (int k = 2; k <= std::min(p, 4); ++k) {
                const auto v = find_k_clique(g, k);
                const auto oracle = clique_exhaustive(g, k);
                if (v.kind == CliqueKind::Found) {
                    ASSERT_TRUE(is_clique(g, v.vertices));
                    ASSERT_EQ(v.vertices.size(), static_cast<std::size_t>(k));
                    ASSERT_TRUE(oracle.has_value());
                }
                if (v.kind == CliqueKind::NotFound) { ASSERT_FALSE(oracle.has_value()); }
                if (v.run.degree_filtered) { ASSERT_EQ(v.kind, CliqueKind::NotFound); }
            }
}

TEST(FindKClique, EdgesAreAlwaysFound) {
    for (int p = 2; p <= 5; ++p)
        for (const Graph& g : enumerate_labeled_graphs(p))
            ASSERT_EQ(find_k_clique(g, 2).kind == CliqueKind::Found, g.size() > 0);
}
