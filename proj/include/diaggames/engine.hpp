// engine.hpp -- plays strategies against adversaries and judges the result.

#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diaggames/cantor.hpp"
#include "diaggames/core.hpp"
#include "diaggames/kronecker.hpp"

namespace diaggames {

enum class Winner { cantor, kronecker };

const char* to_string(Winner w);

/// Runs an adaptive game until the strategy claims. The engine rejects
/// duplicate queries, more than m*n queries, and claims of the wrong kind for
/// the regime (all as GameError).
Transcript play_adaptive(CantorStrategy& cantor, Adversary& adversary, const GameParams& params);

using ObliviousOutput = std::function<BinaryVector(const QueryPlan&, const PartialMatrix&)>;

/// Shows the adversary the whole plan, has it answer every planned cell in
/// row-major order, then applies the output rule.
Transcript play_oblivious(const QueryPlan& plan, const ObliviousOutput& output, Adversary& adversary,
                          const GameParams& params);

/// Search game: Cantor wins iff every row has an answered cell that differs
/// from u.
Winner judge_search(const Transcript& t);

/// Decision game (m >= 2^n): "complete" is right iff the fully-revealed rows
/// are all of {0,1}^n; a witness is right iff every row provably differs from
/// it.
Winner judge_decision(const Transcript& t);

/// Dispatches on the claim kind.
Winner judge(const Transcript& t);

/// Decision-game Cantor that asks every cell in a fixed order and then
/// reports what it sees.
class ExhaustiveDecisionStrategy final : public CantorStrategy {
public:
    /// Row-major order.
    explicit ExhaustiveDecisionStrategy(GameParams params);
    ExhaustiveDecisionStrategy(GameParams params, std::vector<Query> order);

    StrategyStep next_query() override;
    void observe(int answer) override;

    const PartialMatrix& matrix() const { return matrix_; }

private:
    PartialMatrix matrix_;
    std::vector<Query> order_;
    std::size_t pos_ = 0;
};

/// Every cell in a seeded uniformly random order.
std::vector<Query> shuffled_cells(const GameParams& params, std::uint64_t seed);

/// A legal but unguided search-game Cantor: asks uniformly random unasked
/// cells and claims the moment some vector is provably missing. Used to probe
/// lower bounds.
class RandomLegalStrategy final : public CantorStrategy {
public:
    RandomLegalStrategy(GameParams params, std::uint64_t seed);
    StrategyStep next_query() override;
    void observe(int answer) override;

private:
    PartialMatrix matrix_;
    std::vector<Query> order_;
    std::size_t pos_ = 0;
};

/// One line of an experiment table.
struct TableRow {
    int n = 0;
    int m = 0;
    std::string scenario;
    std::uint64_t queries = 0;
    std::optional<std::uint64_t> formula;
    std::optional<int> oracle;
    Winner winner = Winner::kronecker;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

/// Scenario names accepted by run_table.
const std::vector<std::string>& table_scenarios();

/// Plays one game per applicable (n, m) cell. Output order is by (n, m)
/// regardless of `jobs`.
std::vector<TableRow> run_table(const std::string& scenario, IntRange n_range, IntRange m_range, int jobs = 1);

/// CSV with header n,m,scenario,queries,formula,oracle,winner.
std::string to_csv(const std::vector<TableRow>& rows);

}  // namespace diaggames
