#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "nbc/search.hpp"
#include "support.hpp"

using namespace nbc;

namespace {

// Solution sets compared as sorted lists of raw color vectors.
std::vector<std::vector<int>> solution_set(const SearchOutcome& outcome) {
    std::vector<std::vector<int>> set;
    for (const auto& c : outcome.colorings)
        set.emplace_back(c.colors().begin(), c.colors().end());
    std::sort(set.begin(), set.end());
    return set;
}

}  // namespace

TEST_CASE("decide", "[search]") {
    SearchConfig config{Palette(3)};
    SECTION("degree filter rejects C_5 without exploring") {
        SearchOutcome outcome = decide(generate(FamilySpec::cycle(5)), config);
        CHECK(outcome.status == SearchStatus::Exhausted);
        CHECK(outcome.colorings.empty());
        CHECK(outcome.nodes_explored == 0);
    }
    SECTION("finds a balanced coloring of K_{3,3}") {
        Graph g = testutil::k33();
        SearchOutcome outcome = decide(g, config);
        REQUIRE(outcome.status == SearchStatus::Found);
        REQUIRE(outcome.colorings.size() == 1);
        CHECK(verify(g, outcome.colorings[0]).balanced);
    }
    SECTION("complete graphs up to K_9 are exhausted") {
        for (int n = 2; n <= 9; ++n) {
            SearchOutcome outcome = decide(generate(FamilySpec::complete(n)), config);
            CAPTURE(n);
            CHECK(outcome.status == SearchStatus::Exhausted);
        }
    }
    SECTION("empty graph is vacuously balanced") {
        SearchOutcome outcome = decide(testutil::empty_graph(0), config);
        CHECK(outcome.status == SearchStatus::Found);
        REQUIRE(outcome.colorings.size() == 1);
        CHECK(outcome.colorings[0].size() == 0);
    }
    SECTION("tiny node budget reports BudgetExceeded") {
        SearchConfig tiny = config;
        tiny.node_budget = 3;
        SearchOutcome outcome = decide(testutil::k33(), tiny);
        CHECK(outcome.status == SearchStatus::BudgetExceeded);
    }
}

TEST_CASE("enumerate", "[search]") {
    SearchConfig config{Palette(3)};
    SECTION("one canonical coloring of a single vertex") {
        config.enumerate_limit = 10;
        SearchOutcome outcome = enumerate(testutil::empty_graph(1), config);
        CHECK(outcome.status == SearchStatus::Found);
        CHECK(outcome.colorings.size() == 1);
        CHECK(outcome.colorings[0].color(0) == 0);
    }
    SECTION("K_{3,3} without symmetry breaking has a q!-divisible solution count") {
        config.symmetry_breaking = false;
        config.enumerate_limit = kUnlimited;
        SearchOutcome outcome = enumerate(testutil::k33(), config);
        REQUIRE(outcome.status == SearchStatus::Found);
        CHECK(outcome.colorings.size() == 36);
        CHECK(outcome.colorings.size() % 6 == 0);
    }
    SECTION("K_{3,3} with symmetry breaking returns one representative per class") {
        config.enumerate_limit = kUnlimited;
        SearchOutcome outcome = enumerate(testutil::k33(), config);
        REQUIRE(outcome.status == SearchStatus::Found);
        CHECK(outcome.colorings.size() == 6);
        // Expanding every representative by all q! permutations recovers the
        // full solution set.
        std::set<std::vector<int>> expanded;
        std::vector<int> perm{0, 1, 2};
        std::sort(perm.begin(), perm.end());
        do {
            for (const auto& c : outcome.colorings) {
                Coloring image = permute_colors(c, perm);
                expanded.emplace(image.colors().begin(), image.colors().end());
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(expanded.size() == 36);
    }
    SECTION("exhausted instances return empty lists") {
        config.enumerate_limit = 5;
        SearchOutcome outcome = enumerate(generate(FamilySpec::cycle(5)), config);
        CHECK(outcome.status == SearchStatus::Exhausted);
        CHECK(outcome.colorings.empty());
    }
    SECTION("limit and budgets must be positive") {
        config.enumerate_limit = 0;
        CHECK_THROWS_AS(enumerate(testutil::k33(), config), Error);
        config.enumerate_limit = 1;
        config.node_budget = 0;
        CHECK_THROWS_AS(enumerate(testutil::k33(), config), Error);
        config.node_budget = 100;
        config.time_budget_seconds = -1.0;
        CHECK_THROWS_AS(decide(testutil::k33(), config), Error);
    }
}

TEST_CASE("brute force oracle", "[search]") {
    Palette q3(3);
    SECTION("K_2 has no balanced coloring") {
        CHECK(brute_force_oracle(build_graph(2, {{0, 1}}), q3).status ==
              SearchStatus::Exhausted);
    }
    SECTION("triangle has no balanced coloring") {
        CHECK(brute_force_oracle(generate(FamilySpec::cycle(3)), q3).status ==
              SearchStatus::Exhausted);
    }
    SECTION("K_{3,3} has 36 balanced colorings") {
        SearchOutcome outcome = brute_force_oracle(testutil::k33(), q3);
        REQUIRE(outcome.status == SearchStatus::Found);
        CHECK(outcome.colorings.size() == 36);
        CHECK(outcome.nodes_explored == 729);
        for (const auto& c : outcome.colorings) CHECK(verify(testutil::k33(), c).balanced);
    }
    SECTION("instance cap") {
        CHECK_THROWS_AS(brute_force_oracle(testutil::empty_graph(20), q3), InstanceTooLarge);
        CHECK_NOTHROW(brute_force_oracle(testutil::empty_graph(6), q3));
    }
}

TEST_CASE("search agrees with the oracle on random graphs", "[search]") {
    std::mt19937 rng(60902);
    SearchConfig config{Palette(3)};
    for (int n = 4; n <= 7; ++n) {
        for (int round = 0; round < 25; ++round) {
            Graph g = testutil::random_graph(n, 0.5, rng);
            SearchOutcome fast = decide(g, config);
            SearchOutcome slow = brute_force_oracle(g, config.palette);
            CAPTURE(n, round);
            REQUIRE(fast.status == slow.status);
            if (fast.status == SearchStatus::Found)
                CHECK(verify(g, fast.colorings[0]).balanced);
        }
    }
}

TEST_CASE("unpruned enumeration equals the oracle solution set", "[search]") {
    std::mt19937 rng(424243);
    SearchConfig config{Palette(3)};
    config.symmetry_breaking = false;
    config.enumerate_limit = kUnlimited;
    std::vector<Graph> graphs{testutil::k33(),
                              generate(FamilySpec::cycle(6)),
                              generate(FamilySpec::cycle(3)),
                              testutil::empty_graph(4),
                              testutil::path_graph(5)};
    for (int round = 0; round < 15; ++round)
        graphs.push_back(testutil::random_graph(4 + round % 3, 0.5, rng));
    for (const auto& g : graphs) {
        SearchOutcome searched = enumerate(g, config);
        SearchOutcome oracle = brute_force_oracle(g, config.palette);
        CHECK(searched.status == oracle.status);
        CHECK(solution_set(searched) == solution_set(oracle));
    }
}

TEST_CASE("raising the node budget only converts BudgetExceeded", "[search]") {
    Graph g = testutil::k33();
    SearchConfig config{Palette(3)};
    SearchOutcome reference = decide(g, config);
    REQUIRE(reference.status == SearchStatus::Found);
    bool seen_found = false;
    for (std::int64_t budget = 1; budget <= reference.nodes_explored + 5; ++budget) {
        config.node_budget = budget;
        SearchOutcome outcome = decide(g, config);
        if (seen_found) {
            REQUIRE(outcome.status == SearchStatus::Found);
            CHECK(outcome.colorings[0] == reference.colorings[0]);
        } else if (outcome.status == SearchStatus::Found) {
            seen_found = true;
            CHECK(outcome.colorings[0] == reference.colorings[0]);
        } else {
            CHECK(outcome.status == SearchStatus::BudgetExceeded);
        }
    }
    CHECK(seen_found);
}

TEST_CASE("identical configurations give identical outcomes", "[search]") {
    std::mt19937 rng(11);
    for (int round = 0; round < 10; ++round) {
        Graph g = testutil::random_graph(7, 0.5, rng);
        SearchConfig config{Palette(3)};
        config.enumerate_limit = 4;
        SearchOutcome a = enumerate(g, config);
        SearchOutcome b = enumerate(g, config);
        CHECK(a.status == b.status);
        CHECK(a.nodes_explored == b.nodes_explored);
        CHECK(a.colorings == b.colorings);
    }
}
