#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "brute_force.hpp"
#include "diaggames/cantor.hpp"
#include "diaggames/oracle.hpp"

namespace diaggames {
namespace {

struct Driven {
    std::vector<Query> queries;
    PartialMatrix answers;
    Claim claim{SearchClaim{BinaryVector(0, 1)}};
};

Driven drive(CantorStrategy& s, const GameParams& p, const std::function<int(Query)>& answer) {
    Driven d{{}, PartialMatrix(p)};
    while (true) {
        auto step = s.next_query();
        if (auto* c = std::get_if<Claim>(&step)) {
            d.claim = *c;
            return d;
        }
        const auto q = std::get<Query>(step);
        const int b = answer(q);
        d.queries.push_back(q);
        d.answers.set(q, b);
        s.observe(b);
    }
}

BinaryVector search_u(const Driven& d) { return std::get<SearchClaim>(d.claim).u; }

bool defeats_every_row(const PartialMatrix& L, const BinaryVector& u) {
    for (int i = 0; i < L.rows(); ++i) {
        if (L.row_compatible(i, u)) return false;
    }
    return true;
}

// Answer matrix for a plan, with every planned cell drawn from `bits` row by
// row (one int per planned cell).
PartialMatrix answer_plan(const QueryPlan& plan, const std::vector<int>& bits) {
    PartialMatrix L(GameParams(plan.rows(), plan.cols()));
    std::size_t k = 0;
    for (const auto q : plan.queries()) L.set(q, bits.at(k++));
    return L;
}

TEST(Diagonal, FlipsTheDiagonal) {
    const GameParams p(3, 6);
    DiagonalStrategy s(p);
    const int diag[] = {0, 0, 1};
    const auto d = drive(s, p, [&](Query q) { return diag[q.row]; });
    ASSERT_EQ(d.queries.size(), 3U);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(d.queries[i], (Query{i, i}));
    EXPECT_EQ(search_u(d).to_string(), "110000");
}

TEST(Diagonal, SingleCell) {
    const GameParams p(1, 1);
    DiagonalStrategy s(p);
    EXPECT_EQ(search_u(drive(s, p, [](Query) { return 0; })).to_string(), "1");
}

TEST(Diagonal, SquareMatrix) {
    const GameParams p(6, 6);
    DiagonalStrategy s(p);
    const int diag[] = {0, 0, 1, 1, 0, 1};
    EXPECT_EQ(search_u(drive(s, p, [&](Query q) { return diag[q.row]; })).to_string(), "110010");
}

TEST(Diagonal, RejectsMidRegime) { EXPECT_THROW(DiagonalStrategy(GameParams(4, 3)), GameError); }

TEST(ChooseX, TwoCaseRule) {
    EXPECT_EQ(choose_x(4, 3), 1);
    EXPECT_EQ(choose_x(7, 3), 4);
    EXPECT_EQ(choose_x(5, 3), 2);
    EXPECT_THROW(choose_x(3, 3), GameError);
    EXPECT_THROW(choose_x(8, 3), GameError);
}

TEST(ChooseX, KeepsTheRecursionInRange) {
    for (int n = 2; n <= 12; ++n) {
        for (int m = n + 1; m < (1 << n); ++m) {
            const int x = choose_x(m, n);
            EXPECT_GE(x, 1);
            EXPECT_LE(2 * x - 1, m);
            EXPECT_LE(n - 1, m - x);
            EXPECT_LT(m - x, 1 << (n - 1));
        }
    }
}

TEST(Adaptive, TraceForFourRowsThreeColumns) {
    const GameParams p(4, 3);
    AdaptiveStrategy s(p);
    const auto d = drive(s, p, [](Query) { return 0; });
    EXPECT_EQ(d.queries.size(), 5U);
    // Column 1: one query (x=1); column 2: three queries (x=2); then the tail.
    EXPECT_EQ(d.queries[0].col, 0);
    EXPECT_EQ(d.queries[1].col, 1);
    EXPECT_EQ(d.queries[2].col, 1);
    EXPECT_EQ(d.queries[3].col, 1);
    EXPECT_EQ(d.queries[4].col, 2);
    EXPECT_TRUE(defeats_every_row(d.answers, search_u(d)));
}

TEST(Adaptive, SevenRowsUseElevenQueries) {
    const GameParams p(7, 3);
    AdaptiveStrategy s(p);
    const auto d = drive(s, p, [](Query q) { return (q.row + q.col) & 1; });
    EXPECT_EQ(d.queries.size(), 11U);
    EXPECT_TRUE(defeats_every_row(d.answers, search_u(d)));
}

TEST(Adaptive, MajorityRetiresLowestRows) {
    // (n=3, m=5): x=2 on the first column, so rows 1..3 are asked.
    const GameParams p(5, 3);
    AdaptiveStrategy s(p);
    const int first[] = {1, 1, 0};
    auto step = s.next_query();
    for (int k = 0; k < 3; ++k) {
        ASSERT_TRUE(std::holds_alternative<Query>(step));
        EXPECT_EQ(std::get<Query>(step), (Query{k, 0}));
        s.observe(first[k]);
        step = s.next_query();
    }
    EXPECT_EQ(s.alive_rows(), (std::vector<int>{2, 3, 4}));
}

TEST(Adaptive, RejectsOtherRegimes) {
    EXPECT_THROW(AdaptiveStrategy(GameParams(3, 3)), GameError);
    EXPECT_THROW(AdaptiveStrategy(GameParams(8, 3)), GameError);
}

// Exactly 2m-n queries and a u that beats every row, for random answers.
TEST(AdaptiveProperty, CountAndCorrectness) {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 7; ++n) {
        for (int m = n + 1; m < (1 << n); ++m) {
            for (int trial = 0; trial < 3; ++trial) {
                const GameParams p(m, n);
                AdaptiveStrategy s(p);
                const auto d = drive(s, p, [&](Query) { return static_cast<int>(rng() & 1U); });
                ASSERT_EQ(d.queries.size(), static_cast<std::size_t>(2 * m - n)) << n << "," << m;
                ASSERT_TRUE(defeats_every_row(d.answers, search_u(d))) << n << "," << m;
            }
        }
    }
}

TEST(ObliviousBlock, SizeFromClosedForm) {
    EXPECT_EQ(oblivious_block_d_closed_form(GameParams(6, 4)), 4);
    EXPECT_EQ(oblivious_block_d(GameParams(6, 4)), 4);
    EXPECT_TRUE(block_size_satisfies_bound(4, 6, 4));
    EXPECT_EQ(oblivious_block_d_closed_form(256, 64), 8);
    EXPECT_TRUE(block_size_satisfies_bound(8, 256, 64));
}

TEST(ObliviousBlock, BoundMatchesRatioForm) {
    for (int n = 1; n <= 20; ++n) {
        for (int m = 1; m <= 400; m += 7) {
            for (int d = 1; d <= n; ++d) {
                const bool ratio = std::ldexp(1.0, d) / d > 2.0 * m / n;
                EXPECT_EQ(block_size_satisfies_bound(d, m, n), ratio) << d << " " << m << " " << n;
            }
        }
    }
}

TEST(ObliviousPlan, OneBlockForSixRowsFourColumns) {
    const auto plan = oblivious_plan(GameParams(6, 4));
    ASSERT_EQ(plan.rows(), 6);
    for (int i = 0; i < 6; ++i) EXPECT_EQ(plan.columns(i), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(plan.total_size(), 24U);
}

TEST(ObliviousPlan, OneMoreRowThanColumns) {
    const auto plan = oblivious_plan(GameParams(7, 6));
    for (int i = 0; i < 3; ++i) EXPECT_EQ(plan.columns(i), (std::vector<int>{0, 1}));
    for (int i = 3; i < 7; ++i) EXPECT_EQ(plan.columns(i), (std::vector<int>{i - 1}));
    EXPECT_EQ(plan.total_size(), 10U);
    EXPECT_TRUE(is_block_structured(plan));
}

TEST(ObliviousPlan, BlockStructureAndGroupSizes) {
    for (int n = 2; n <= 16; ++n) {
        const int top = n <= 10 ? (1 << n) : 1500;
        for (int m = n + 2; m < top; ++m) {
            const GameParams p(m, n);
            const auto d = oblivious_block_d(p);
            if (!d) continue;
            const auto plan = oblivious_plan(p);
            ASSERT_TRUE(is_block_structured(plan));
            EXPECT_EQ(plan.total_size(), static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(*d));
            EXPECT_TRUE(block_size_satisfies_bound(*d, m, n));
            std::map<std::vector<int>, int> groups;
            for (int i = 0; i < m; ++i) ++groups[plan.columns(i)];
            const int blocks = n / *d;
            EXPECT_EQ(static_cast<int>(groups.size()), blocks);
            int lo = m, hi = 0;
            for (const auto& [cols, size] : groups) {
                EXPECT_EQ(static_cast<int>(cols.size()), *d);
                lo = std::min(lo, size);
                hi = std::max(hi, size);
            }
            EXPECT_LE(hi - lo, 1);
            EXPECT_LE(hi, (m + blocks - 1) / blocks);
            EXPECT_LT(hi, 1 << *d);
        }
    }
}

TEST(ObliviousOutput, SmallestUnrealizedPattern) {
    const QueryPlan plan(2, {{0, 1}, {0, 1}, {0, 1}});
    const auto L = answer_plan(plan, {0, 0, 0, 1, 1, 0});
    EXPECT_EQ(oblivious_output(plan, L).to_string(), "11");

    const QueryPlan single(1, {{0}});
    EXPECT_EQ(oblivious_output(single, answer_plan(single, {0})).to_string(), "1");

    const QueryPlan full(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    EXPECT_THROW(oblivious_output(full, answer_plan(full, {0, 0, 0, 1, 1, 0, 1, 1})), GameError);
}

TEST(ObliviousOutput, UnqueriedColumnsDefaultToZero) {
    const QueryPlan plan(3, {{0}, {0}, {1}});
    EXPECT_THROW(oblivious_output(plan, answer_plan(plan, {0, 1, 0})), GameError);
    const QueryPlan ok(3, {{1}});
    EXPECT_EQ(oblivious_output(ok, answer_plan(ok, {0})).to_string(), "010");
}

// u beats every row for every answer vector on small block plans.
TEST(ObliviousProperty, OutputDefeatsEveryRow) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 8; ++n) {
        for (int m = n + 1; m < std::min(1 << n, 40); ++m) {
            const GameParams p(m, n);
            const auto plan = oblivious_plan(p);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<int> bits(plan.total_size());
                for (auto& b : bits) b = static_cast<int>(rng() & 1U);
                const auto L = answer_plan(plan, bits);
                const auto u = plan_output(plan, L);
                ASSERT_TRUE(defeats_every_row(L, u)) << n << "," << m;
            }
        }
    }
}

TEST(Endgame, OmissionPlanSizes) {
    const auto p35 = endgame_omission_plan(GameParams(5, 3));
    EXPECT_EQ(p35.total_size(), 13U);
    EXPECT_EQ(p35.columns(0), (std::vector<int>{1, 2}));
    EXPECT_EQ(p35.columns(1), (std::vector<int>{1, 2}));
    EXPECT_EQ(p35.columns(2), (std::vector<int>{0, 1, 2}));

    EXPECT_EQ(endgame_plan(GameParams(7, 3)).total_size(), 21U);
    EXPECT_THROW(endgame_plan(GameParams(3, 3)), GameError);
}

TEST(Endgame, ParityPlanForHalfCube) {
    const auto plan = endgame_plan(GameParams(4, 3));
    EXPECT_EQ(plan, endgame_parity_plan(GameParams(4, 3)));
    EXPECT_EQ(plan.total_size(), 8U);
    std::vector<int> omitted(3, 0);
    for (int i = 0; i < plan.rows(); ++i) {
        for (int j = 0; j < 3; ++j) {
            if (!(plan.mask(i) & column_mask(j, 3))) ++omitted[static_cast<std::size_t>(j)];
        }
    }
    EXPECT_EQ(omitted, (std::vector<int>{3, 1, 0}));
}

TEST(Endgame, PlansDefeatEveryAnswerSet) {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1 << (n - 1); m < (1 << n); ++m) {
            const auto plan = endgame_plan(GameParams(m, n));
            const auto cells = plan.total_size();
            for (std::uint64_t word = 0; word < (std::uint64_t{1} << cells); ++word) {
                std::vector<int> bits(cells);
                for (std::uint64_t k = 0; k < cells; ++k) bits[k] = static_cast<int>((word >> k) & 1U);
                const auto L = answer_plan(plan, bits);
                ASSERT_TRUE(defeats_every_row(L, plan_output(plan, L)));
            }
        }
    }
}

TEST(FirstDefeatingVector, ScansInOrder) {
    PartialMatrix L(GameParams(2, 2));
    EXPECT_FALSE(first_defeating_vector(L).has_value());
    L.set({0, 0}, 0);
    L.set({1, 1}, 0);
    EXPECT_EQ(first_defeating_vector(L)->to_string(), "11");
}

}  // namespace
}  // namespace diaggames
