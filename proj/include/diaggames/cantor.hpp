// cantor.hpp -- strategies for the player who must produce a missing vector.
//
// Adaptive strategies implement CantorStrategy and are driven one query at a
// time. Oblivious strategies are a QueryPlan plus an output rule applied once
// every planned query has been answered.

#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "diaggames/core.hpp"

namespace diaggames {

/// Per-row column sets J_1..J_m (0-based columns, each sorted ascending).
class QueryPlan {
public:
    QueryPlan() = default;
    QueryPlan(int n, std::vector<std::vector<int>> per_row);

    int rows() const { return static_cast<int>(per_row_.size()); }
    int cols() const { return n_; }
    const std::vector<int>& columns(int row) const { return per_row_[static_cast<std::size_t>(row)]; }
    const std::vector<std::vector<int>>& per_row() const { return per_row_; }
    std::uint32_t mask(int row) const;
    std::uint64_t total_size() const;

    /// Row-major list of all planned queries.
    std::vector<Query> queries() const;

    friend bool operator==(const QueryPlan&, const QueryPlan&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> per_row_;
};

/// Either the next cell to ask about, or the final claim.
using StrategyStep = std::variant<Query, Claim>;

/// Interactive protocol shared by every adaptive Cantor strategy.
class CantorStrategy {
public:
    virtual ~CantorStrategy() = default;
    virtual StrategyStep next_query() = 0;
    virtual void observe(int answer) = 0;
};

/// Queries (i,i) for every row and flips the answers. Requires m <= n.
class DiagonalStrategy final : public CantorStrategy {
public:
    explicit DiagonalStrategy(GameParams params);
    StrategyStep next_query() override;
    void observe(int answer) override;

private:
    GameParams params_;
    int next_row_ = 0;
    bool awaiting_ = false;
    std::vector<int> u_;
};

/// Number of rows eliminated on one column of the 2m-n recursion.
/// Requires n' < m' < 2^n'.
int choose_x(int m_alive, int n_left);

/// The adaptive 2m-n strategy for n < m < 2^n.
///
/// On each column it asks the first 2x-1 alive rows, takes the majority answer
/// e, fixes u's bit to 1-e and retires x rows that answered e (lowest indices
/// first). Once no more rows are alive than columns remain it finishes by
/// diagonalization on the suffix.
class AdaptiveStrategy final : public CantorStrategy {
public:
    explicit AdaptiveStrategy(GameParams params);
    StrategyStep next_query() override;
    void observe(int answer) override;

    const std::vector<int>& alive_rows() const { return alive_; }

private:
    void start_column();

    GameParams params_;
    std::vector<int> alive_;
    std::vector<int> u_;
    int col_ = 0;
    bool diagonal_tail_ = false;
    int x_ = 0;
    std::vector<Query> pending_;
    std::size_t pending_pos_ = 0;
    std::vector<int> answers_;
    bool awaiting_ = false;
};

/// Smallest vector u that every row provably differs from, or nullopt.
std::optional<BinaryVector> first_defeating_vector(const PartialMatrix& L);

/// Block size d for the oblivious block plan. Starts from
/// ceil(log(2m/n) + 2 log log(2m/n) + 1) and adjusts it to the smallest value
/// that is actually feasible; nullopt when no d <= n works.
std::optional<int> oblivious_block_d(const GameParams& params);

/// The closed-form value alone, before any feasibility adjustment.
int oblivious_block_d_closed_form(const GameParams& params);
/// Same formula on raw dimensions, without the column cap.
int oblivious_block_d_closed_form(std::int64_t m, std::int64_t n);

/// 2^d > 2md/n, written without division.
bool block_size_satisfies_bound(int d, int m, int n);

/// Block plan for n < m < 2^n (with the m = n+1 shortcut). Falls back to the
/// endgame plan or the full plan when no block size is feasible.
QueryPlan oblivious_plan(const GameParams& params);

/// Output rule for block-structured plans: rows with identical column sets
/// form a group, and u takes, on each group's block, the smallest pattern no
/// group member realizes. Throws GameError if a group realizes every pattern
/// or if two groups' blocks overlap.
BinaryVector oblivious_output(const QueryPlan& plan, const PartialMatrix& answers);

/// Plan that skips d = 2^n - m - 1 cells, one per row, in column 1 of rows
/// 1..d. Requires 2^(n-1) <= m < 2^n.
QueryPlan endgame_omission_plan(const GameParams& params);

/// For m = 2^(n-1), n >= 2: skips one column per row (column 1 in rows
/// 1..m-1, column 2 in row m), mn - 2^(n-1) queries total.
QueryPlan endgame_parity_plan(const GameParams& params);

/// The cheapest endgame plan: the parity plan when m = 2^(n-1) and n >= 2,
/// otherwise the omission plan.
QueryPlan endgame_plan(const GameParams& params);

/// Output rule usable with any winning plan: first_defeating_vector, throwing
/// if none exists.
BinaryVector generic_oblivious_output(const QueryPlan& plan, const PartialMatrix& answers);

/// Rows with equal column sets share a block and distinct blocks are disjoint.
bool is_block_structured(const QueryPlan& plan);

/// oblivious_output for block-structured plans, generic_oblivious_output
/// otherwise.
BinaryVector plan_output(const QueryPlan& plan, const PartialMatrix& answers);

}  // namespace diaggames
