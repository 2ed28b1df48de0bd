#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bitab/golden.hpp"
#include "bitab/hunt.hpp"

using namespace bitab;

namespace {

HuntIsoOptions exhaustive(int p) {
    HuntIsoOptions o;
    o.max_p = p;
    return o;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("bitab_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(HuntIso, FourVertices) {
    const auto r = hunt_iso(exhaustive(4));
    const auto& b = r.at("body");
    EXPECT_EQ(b.at("schema_version"), 1);
    EXPECT_EQ(b.at("totals").at("graphs_examined"), 64);
    EXPECT_EQ(b.at("categories").at("unsound_isomorphic_pairs"), 0);
    EXPECT_EQ(b.at("categories").at("isomorphism_classes"), 11);
    EXPECT_EQ(b.at("categories").at("pairs_examined"), 64 * 63 / 2);
    const auto agreements = b.at("totals").at("agreements").get<std::uint64_t>();
    EXPECT_EQ(agreements + b.at("totals").at("disagreements").get<std::uint64_t>(), 64U);
    EXPECT_EQ(b.at("step_stats").at("runs"), 64);
    EXPECT_EQ(b.at("step_stats").at("budget"), 6);
    EXPECT_TRUE(r.at("header").contains("generated_at"));
}

TEST(HuntIso, TrivialSizes) {
    const auto one = hunt_iso(exhaustive(1)).at("body");
    EXPECT_EQ(one.at("totals").at("graphs_examined"), 1);
    EXPECT_EQ(one.at("totals").at("agreements"), 1);
    EXPECT_EQ(one.at("categories").at("pairs_examined"), 0);
}

TEST(HuntIso, PairCategoriesAddUp) {
    for (int p = 2; p <= 5; ++p) {
        const auto c = hunt_iso(exhaustive(p)).at("body").at("categories");
        const auto total = c.at("pairs_examined").get<std::uint64_t>();
        const auto certified = c.at("certified_nonisomorphic_pairs").get<std::uint64_t>();
        const auto inconclusive = c.at("inconclusive_pairs").get<std::uint64_t>();
        const auto iso = c.at("isomorphic_pairs").get<std::uint64_t>();
        const auto unequal = c.at("isomorphic_pairs_unequal_forms").get<std::uint64_t>();
        // Every pair is certified different, confirmed equal by greedy forms, or inconclusive.
        EXPECT_EQ(certified + inconclusive + (iso - unequal), total) << p;
        EXPECT_EQ(c.at("inconclusive_resolved_isomorphic").get<std::uint64_t>() +
                      c.at("inconclusive_resolved_nonisomorphic").get<std::uint64_t>(),
                  inconclusive);
    }
}

TEST(HuntIso, RandomModeIsDeterministic) {
    HuntIsoOptions o;
    o.max_p = 7;
    o.mode = HuntMode::Random;
    o.count = 1000;
    o.seed = 42;
    const auto a = hunt_iso(o), b = hunt_iso(o);
    EXPECT_EQ(a.at("body").dump(), b.at("body").dump());
    EXPECT_EQ(a.at("body").at("totals").at("graphs_examined"), 1000);
    EXPECT_EQ(a.at("body").at("categories").at("unsound_isomorphic_pairs"), 0);
    EXPECT_EQ(a.at("body").at("categories").at("relabeled_pairs"), 1000);
    o.seed = 43;
    EXPECT_NE(hunt_iso(o).at("body").dump(), a.at("body").dump());
}

TEST(HuntIso, Refusals) {
    HuntIsoOptions o;
    o.max_p = 5;
    o.mode = HuntMode::Random;
    o.count = 10;
    EXPECT_THROW(hunt_iso(o), std::invalid_argument);
    EXPECT_THROW(hunt_iso(exhaustive(7)), CapExceeded);
    o.seed = 1;
    o.max_p = 9;
    EXPECT_THROW(hunt_iso(o), CapExceeded);
}

TEST(HuntIso, ListingIsCapped) {
    HuntIsoOptions o = exhaustive(5);
    o.max_listed = 1;
    const auto b = hunt_iso(o).at("body");
    EXPECT_LE(b.at("counterexamples_listed").get<std::size_t>(), 2U);
    EXPECT_GE(b.at("counterexamples_total").get<std::size_t>(), b.at("counterexamples_listed").get<std::size_t>());
}

TEST(HuntClique, Small) {
    HuntCliqueOptions o;
    o.max_p = 3;
    o.k = 3;
    const auto b3 = hunt_clique(o).at("body");
    EXPECT_EQ(b3.at("totals").at("graphs_examined"), 8);
    EXPECT_EQ(b3.at("categories").at("oracle_found"), 1);
    EXPECT_EQ(b3.at("categories").at("greedy_found"), 1);

    o.max_p = 4;
    const auto b4 = hunt_clique(o).at("body");
    EXPECT_EQ(b4.at("totals").at("graphs_examined"), 64);
    EXPECT_EQ(b4.at("categories").at("unsound_found"), 0);
    EXPECT_EQ(b4.at("categories").at("unsound_not_found"), 0);
    const auto found = b4.at("categories").at("greedy_found").get<std::uint64_t>();
    EXPECT_EQ(found + b4.at("categories").at("greedy_missed").get<std::uint64_t>(),
              b4.at("categories").at("oracle_found").get<std::uint64_t>());
}

TEST(HuntClique, Refusals) {
    HuntCliqueOptions o;
    o.max_p = 3;
    o.k = 4;
    EXPECT_THROW(hunt_clique(o), std::invalid_argument);
    o.k = 1;
    EXPECT_THROW(hunt_clique(o), std::invalid_argument);
    o.max_p = 8;
    o.k = 3;
    EXPECT_THROW(hunt_clique(o), CapExceeded);
}

TEST(Golden, ShippedCasesPass) {
    const auto results = run_golden_dir(BITAB_GOLDEN_DIR);
    EXPECT_GE(results.size(), 13U);
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.message;
}

TEST(Golden, CorruptedCaseFailsByName) {
    const auto dir = scratch_dir("golden_corrupt");
    std::ofstream(dir / "bad_case.json") << "{ \"name\": ";
    std::ofstream(dir / "wrong_answer.json")
        << R"({"name": "wrong-answer", "kind": "automorphism_count", "graph": "3 3\n1 2\n1 3\n2 3\n", "expected": 5})";
    const auto results = run_golden_dir(dir);
    ASSERT_EQ(results.size(), 2U);
    EXPECT_EQ(results[0].name, "bad_case");
    EXPECT_FALSE(results[0].passed);
    EXPECT_EQ(results[1].name, "wrong-answer");
    EXPECT_FALSE(results[1].passed);
    EXPECT_EQ(results[1].message, "automorphism count 6, expected 5");
    std::filesystem::remove_all(dir);
}

TEST(Golden, EmptyOrMissingDirectory) {
    const auto dir = scratch_dir("golden_empty");
    EXPECT_THROW(run_golden_dir(dir), std::runtime_error);
    EXPECT_THROW(run_golden_dir(dir / "missing"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
