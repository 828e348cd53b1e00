// matching.hpp -- blocked/unblocked certification for the m >= 2^n game.
//
// The bipartite graph has the matrix rows on one side and every vector of
// {0,1}^n on the other; a row and a vector are adjacent when the vector is a
// completion of the row. L is unblocked exactly when some matching saturates
// the vector side. MatchingState keeps a maximum matching and repairs it with
// a single augmenting-path search each time one cell is revealed.

#pragma once

#include <optional>
#include <vector>

#include "diaggames/core.hpp"

namespace diaggames {

class MatchingState {
public:
    /// Builds a maximum matching from scratch. Requires n <= 20.
    explicit MatchingState(PartialMatrix L);

    const PartialMatrix& matrix() const { return matrix_; }
    int size() const { return size_; }
    std::uint32_t vector_count() const { return static_cast<std::uint32_t>(row_of_.size()); }

    /// True when every vector of {0,1}^n has a partner row (L unblocked).
    bool saturates_vectors() const { return static_cast<std::uint32_t>(size_) == vector_count(); }

    /// Partner row of a vector, or -1.
    int row_of(std::uint32_t v) const { return row_of_[v]; }
    /// Partner vector of a row, or -1.
    std::int64_t vector_of(int row) const { return vector_of_[static_cast<std::size_t>(row)]; }

    /// Would revealing `bit` at q leave the matching size unchanged? Does not
    /// modify the state.
    bool keeps_size(Query q, int bit) const;

    /// Reveals the cell and repairs the matching with one augmenting-path
    /// search. Returns the new matching size.
    int assign(Query q, int bit);

    /// Checks that matched pairs are adjacent and pairwise distinct.
    bool valid() const;

private:
    struct Path {
        std::vector<std::pair<int, std::uint32_t>> pairs;  // (row, vector) edges to match
    };

    // Searches for an augmenting path after the matched edge of `row` has been
    // invalidated by a pending reveal (`pending`, `pending_bit`).
    std::optional<Path> repair_path(Query pending, int pending_bit) const;
    std::optional<Path> path_from_row(int start, Query pending, int pending_bit) const;
    std::optional<Path> path_from_vector(std::uint32_t start, int skip_row, Query pending,
                                         int pending_bit) const;
    bool adjacent(int row, std::uint32_t v, Query pending, int pending_bit) const;
    bool augment_from_row(int row);
    bool augment_from_vector(std::uint32_t v);
    void apply(const Path& p);

    PartialMatrix matrix_;
    std::vector<int> row_of_;
    std::vector<std::int64_t> vector_of_;
    int size_ = 0;
};

/// Unblocked witness (a matching saturating {0,1}^n), or nullopt if blocked.
std::optional<MatchingState> is_unblocked(const PartialMatrix& L);

/// Reveals one cell on a copy of S and repairs it; nullopt if the result is
/// blocked.
std::optional<MatchingState> try_set_and_repair(MatchingState S, Query q, int bit);

}  // namespace diaggames
