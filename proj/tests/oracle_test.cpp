#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "diaggames/oracle.hpp"

namespace diaggames {
namespace {

QueryPlan diagonal_plan(int n) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) rows.push_back({i});
    return QueryPlan(n, rows);
}

TEST(CoveringExists, Examples) {
    const auto f = covering_exists(QueryPlan(2, {{0}, {0}, {1}}));
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->covers_everything(2));
    EXPECT_FALSE(covering_exists(QueryPlan(2, {{0, 1}, {0, 1}, {0, 1}})).has_value());
    for (int n = 1; n <= 8; ++n) EXPECT_FALSE(covering_exists(diagonal_plan(n)).has_value());
}

TEST(CoveringExists, BudgetIsAHardCap) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 9; ++i) rows.push_back({i % 4, (i + 1) % 4});
    EXPECT_NO_THROW(covering_exists(QueryPlan(4, rows)));
    EXPECT_THROW(covering_exists(QueryPlan(4, rows), 2), BudgetExceeded);
    EXPECT_THROW(covering_exists(QueryPlan(13, {{0}})), BudgetExceeded);
}

TEST(CoveringExistsProperty, AgreesWithTupleEnumeration) {
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 4; ++m) {
            testing::for_each_plan(n, m, [&](const QueryPlan& plan) {
                const auto f = covering_exists(plan);
                ASSERT_EQ(f.has_value(), testing::brute_has_covering(plan));
                if (f) ASSERT_TRUE(f->covers_everything(n));
            });
        }
    }
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3;
        const int m = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < m; ++i) {
            std::vector<int> cols;
            for (int j = 0; j < n; ++j) {
                if (rng() % 3 != 0) cols.push_back(j);
            }
            rows.push_back(cols);
        }
        const QueryPlan plan(n, rows);
        ASSERT_EQ(covering_exists(plan).has_value(), testing::brute_has_covering(plan));
    }
}

TEST(ObliviousValue, TinyValues) {
    EXPECT_EQ(oblivious_game_value(GameParams(2, 2)), 2);
    EXPECT_EQ(oblivious_game_value(GameParams(3, 2)), 6);
    EXPECT_EQ(oblivious_game_value(GameParams(3, 3)), 3);
    EXPECT_EQ(oblivious_game_value(GameParams(1, 3)), 1);
}

TEST(ObliviousValue, MatchesPlanEnumeration) {
    EXPECT_EQ(testing::brute_oblivious_value(2, 3), 6);
    EXPECT_EQ(testing::brute_oblivious_value(2, 2), 2);
    EXPECT_EQ(testing::brute_oblivious_value(3, 3), 3);
}

TEST(ObliviousValue, RefusesLargeInstances) {
    EXPECT_THROW(oblivious_game_value(GameParams(7, 4)), BudgetExceeded);
    EXPECT_THROW(oblivious_game_value(GameParams(4, 2)), GameError);
}

TEST(AdaptiveValue, TinyValues) {
    EXPECT_EQ(adaptive_game_value(GameParams(3, 2)), 4);
    EXPECT_EQ(adaptive_game_value(GameParams(3, 3)), 3);
    EXPECT_EQ(adaptive_game_value(GameParams(2, 2)), 2);
    EXPECT_EQ(adaptive_game_value(GameParams(1, 1)), 1);
}

TEST(AdaptiveValue, NeverAboveTheObliviousValue) {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}}) {
        EXPECT_LE(adaptive_game_value(GameParams(m, n)), oblivious_game_value(GameParams(m, n)));
    }
}

TEST(AdaptiveValue, RefusesLargeInstances) {
    EXPECT_THROW(adaptive_game_value(GameParams(6, 3)), BudgetExceeded);
}

bool disjoint_edges(const std::vector<HypercubeEdge>& edges, const std::vector<int>& dirs, int n) {
    std::set<std::uint32_t> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].dir != dirs[k]) return false;
        if (edges[k].low & column_mask(edges[k].dir, n)) return false;
        if (!seen.insert(edges[k].low).second || !seen.insert(edges[k].high(n)).second) return false;
    }
    return true;
}

TEST(EdgeMatching, Examples) {
    const auto two = edge_matching({0, 0}, 2);
    ASSERT_TRUE(two.has_value());
    EXPECT_TRUE(disjoint_edges(*two, {0, 0}, 2));
    EXPECT_EQ((*two)[0].low, 0b00U);
    EXPECT_EQ((*two)[1].low, 0b01U);
    EXPECT_FALSE(edge_matching({0, 1}, 2).has_value());
    EXPECT_THROW(edge_matching({0, 0, 0}, 2), GameError);
}

TEST(EdgeMatching, SmallMultisetsAlwaysFit) {
    for (int n = 2; n <= 3; ++n) {
        const int cap = 1 << (n - 1);
        std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& dirs) {
            if (!dirs.empty()) {
                const auto e = edge_matching(dirs, n);
                const bool even = [&] {
                    std::vector<int> c(static_cast<std::size_t>(n), 0);
                    for (int d : dirs) ++c[static_cast<std::size_t>(d)];
                    return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
                }();
                if (static_cast<int>(dirs.size()) < cap) ASSERT_TRUE(e.has_value());
                else ASSERT_EQ(e.has_value(), even);
                if (e) ASSERT_TRUE(disjoint_edges(*e, dirs, n));
            }
            if (static_cast<int>(dirs.size()) == cap) return;
            for (int d = dirs.empty() ? 0 : dirs.back(); d < n; ++d) {
                dirs.push_back(d);
                rec(dirs);
                dirs.pop_back();
            }
        };
        std::vector<int> dirs;
        rec(dirs);
    }
}

int union_size(const CubeCover& c) {
    std::set<std::uint32_t> all;
    for (const auto& cube : c.cubes) {
        std::uint32_t s = 0;
        while (true) {
            all.insert(cube.base | s);
            if (s == cube.free_mask) break;
            s = ((s | ~cube.free_mask) + 1) & cube.free_mask;
        }
    }
    return static_cast<int>(all.size());
}

TEST(CubeCover, Examples) {
    const auto c = cube_cover_search({{0, 1}, {2}}, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_GE(c->union_size, 5);
    EXPECT_EQ(union_size(*c), c->union_size);

    const auto single = cube_cover_search({{0, 1}}, 3);
    ASSERT_TRUE(single.has_value());
    EXPECT_GE(single->union_size, 3);

    const auto edges = cube_cover_search({{0}, {0}, {1}}, 3);
    ASSERT_TRUE(edges.has_value());
    EXPECT_GE(edges->union_size, 6);

    EXPECT_THROW(cube_cover_search({{0, 1}, {1, 2}}, 3), GameError);
    EXPECT_THROW(cube_cover_search({{}}, 3), GameError);
}

TEST(CubeCover, PlacementsMatchTheirSets) {
    const std::vector<std::vector<int>> sets{{0, 2}, {1}, {3}};
    const auto c = cube_cover_search(sets, 4);
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->cubes.size(), 3U);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        std::uint32_t mask = 0;
        for (int j : sets[k]) mask |= column_mask(j, 4);
        EXPECT_EQ(c->cubes[k].free_mask, mask);
        EXPECT_EQ(c->cubes[k].base & mask, 0U);
    }
    EXPECT_GE(c->union_size, 4 + 3);
}

TEST(Completions, CountAndCoverage) {
    PartialMatrix L(GameParams(4, 2));
    L.set({0, 0}, 0);
    L.set({0, 1}, 0);
    L.set({1, 0}, 0);
    L.set({1, 1}, 1);
    L.set({2, 0}, 1);
    L.set({3, 0}, 1);
    int count = 0;
    for_each_completion(L, [&](const auto&) {
        ++count;
        return false;
    });
    EXPECT_EQ(count, 4);
    EXPECT_TRUE(completion_covers_cube(L));
    L.set({2, 1}, 0);
    L.set({3, 1}, 0);
    EXPECT_FALSE(completion_covers_cube(L));
}

TEST(CompletionsProperty, SweepAgreesWithEnumeration) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 9);
        PartialMatrix L(GameParams(m, n));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (rng() % 3 != 0) L.set({i, j}, static_cast<int>(rng() & 1U));
            }
        }
        ASSERT_EQ(completion_covers_cube(L), testing::brute_unblocked(L));
    }
}

}  // namespace
}  // namespace diaggames
