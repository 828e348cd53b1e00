// oracle.hpp -- exhaustive ground truth for tiny instances.
//
// Nothing here reuses the strategy or matching code; every answer comes from
// direct enumeration of the relevant objects. Budgets are hard caps: an
// instance that is too large raises BudgetExceeded instead of returning a
// partial answer.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "diaggames/cantor.hpp"
#include "diaggames/core.hpp"
#include "diaggames/kronecker.hpp"

namespace diaggames {

/// Default node budget of the covering search.
inline constexpr std::uint64_t kCoveringNodeBudget = std::uint64_t{1} << 24;

/// Exact covering-assignment search. Branches on the smallest uncovered vector
/// (some unused row must take it), with a capacity bound. Requires n <= 12.
std::optional<CoveringAssignment> covering_exists(const QueryPlan& plan,
                                                  std::uint64_t node_budget = kCoveringNodeBudget);

/// f(n,m): fewest total queries of an oblivious plan with no covering
/// assignment. Requires n <= 3, m <= 6, m < 2^n.
int oblivious_game_value(const GameParams& params);

/// g(n,m): exact minimax value of the adaptive game. Requires n <= 3, m <= 5,
/// m < 2^n.
int adaptive_game_value(const GameParams& params);

/// A j-edge {low, low | bit(dir)} of the hypercube; dir is 0-based.
struct HypercubeEdge {
    std::uint32_t low = 0;
    int dir = 0;
    std::uint32_t high(int n) const { return low | column_mask(dir, n); }
    friend bool operator==(const HypercubeEdge&, const HypercubeEdge&) = default;
};

/// Pairwise-disjoint edges e_1..e_d of {0,1}^n with e_i in direction D_i
/// (0-based), or nullopt. Requires n <= 4 and |D| <= 2^(n-1).
std::optional<std::vector<HypercubeEdge>> edge_matching(const std::vector<int>& directions, int n);

/// A J-cube: the base vector (zero on the free columns) plus the free mask.
struct CubePlacement {
    std::uint32_t base = 0;
    std::uint32_t free_mask = 0;
};

struct CubeCover {
    std::vector<CubePlacement> cubes;  // same order as the input sets
    int union_size = 0;
};

/// Placements of J_i-cubes whose union has at least d + q vectors, where
/// d = sum |J_i|. Requires n <= 4, nonempty sets, d < 2^(n-1).
std::optional<CubeCover> cube_cover_search(const std::vector<std::vector<int>>& sets, int n);

/// Calls f(rows) for every completion of L (rows packed as integers). Stops
/// early when f returns true. Requires at most 24 unknown cells.
void for_each_completion(const PartialMatrix& L, const std::function<bool(const std::vector<std::uint32_t>&)>& f);

/// Whether some completion of L contains all of {0,1}^n, decided by a
/// reachable-set sweep over the rows. Requires n <= 4.
bool completion_covers_cube(const PartialMatrix& L);

}  // namespace diaggames
