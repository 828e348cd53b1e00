// kronecker.hpp -- adversaries for the player holding the matrix.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "diaggames/cantor.hpp"
#include "diaggames/core.hpp"
#include "diaggames/matching.hpp"

namespace diaggames {

/// Uniform adversary protocol. In the oblivious game observe_plan is called
/// with the full plan before the first answer.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual int answer(Query q) = 0;
    virtual void observe_plan(const QueryPlan& /*plan*/) {}
};

/// Per-column counts of zero and one answers.
struct ColumnBalance {
    std::vector<int> zeros;
    std::vector<int> ones;

    explicit ColumnBalance(int n) : zeros(static_cast<std::size_t>(n), 0), ones(static_cast<std::size_t>(n), 0) {}
};

/// Answers with whichever value is rarer in the column so far (0 on ties) and
/// records it.
int balanced_answer(ColumnBalance& state, Query q);

class BalancedAdversary final : public Adversary {
public:
    explicit BalancedAdversary(int n) : balance_(n) {}
    int answer(Query q) override { return balanced_answer(balance_, q); }
    const ColumnBalance& balance() const { return balance_; }

private:
    ColumnBalance balance_;
};

/// Fair coin per query from a seeded 64-bit Mersenne Twister.
class RandomAdversary final : public Adversary {
public:
    explicit RandomAdversary(std::uint64_t seed) : rng_(seed) {}
    int answer(Query) override { return static_cast<int>(rng_() & 1U); }

private:
    std::mt19937_64 rng_;
};

/// f_1..f_m: for each row, the planned columns and the values assigned to them
/// (same order as the plan's column list).
struct CoveringAssignment {
    std::vector<std::vector<int>> columns;
    std::vector<std::vector<int>> values;

    int rows() const { return static_cast<int>(columns.size()); }
    /// Does vector v (packed, n bits) agree with f_row on its domain?
    bool agrees(int row, std::uint32_t v, int n) const;
    /// Every v in {0,1}^n agrees with some f_i; full 2^n scan.
    bool covers_everything(int n) const;
};

/// The greedy construction: rows by ascending |J_i| (ties by index), each
/// taking the smallest pattern that agrees with the most still-uncovered
/// vectors. nullopt if something remains uncovered. Requires n <= 20.
std::optional<CoveringAssignment> greedy_covering(const QueryPlan& plan);

/// Answers an oblivious plan from a covering assignment when one can be found
/// (greedy, then the exact search when n <= 4); otherwise answers 0.
class CoveringAdversary final : public Adversary {
public:
    void observe_plan(const QueryPlan& plan) override;
    int answer(Query q) override;

    const std::optional<CoveringAssignment>& assignment() const { return assignment_; }
    /// A row whose answers agree with u everywhere it was queried, i.e. the
    /// completion Kronecker can reveal as v_i = u.
    std::optional<int> refuting_row(const BinaryVector& u) const;

private:
    int n_ = 0;
    std::optional<CoveringAssignment> assignment_;
};

/// Always answers the same bit.
class ConstantAdversary final : public Adversary {
public:
    explicit ConstantAdversary(int bit) : bit_(bit) {}
    int answer(Query) override { return bit_; }

private:
    int bit_;
};

/// "0 first": answer 0 unless revealing 0 blocks L, then 1. The blocked test
/// is the incremental matching repair.
///
/// For m < 2^n no matrix can be completed to all of {0,1}^n; there the
/// adversary uses the same rule with "blocks" read as "lowers the maximum
/// row-vector matching", which coincides with the original rule when m >= 2^n.
class ZeroFirstAdversary final : public Adversary {
public:
    explicit ZeroFirstAdversary(const GameParams& params);
    int answer(Query q) override;

    const PartialMatrix& matrix() const { return state_.matrix(); }
    const MatchingState& matching() const { return state_; }

private:
    MatchingState state_;
    std::uint64_t answered_ = 0;
    std::uint64_t free_prefix_ = 0;
};

/// Stateless form of the zero-first rule on a given unblocked matrix.
int zero_first_answer(const PartialMatrix& L, Query q);

/// Every row other than the all-zeros vector occurs exactly once.
bool non_essential_rows_all_zero(const PartialMatrix& final_matrix);

}  // namespace diaggames
