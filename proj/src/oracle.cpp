#include "diaggames/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace diaggames {

// ---------------------------------------------------------------------------
// Covering assignments

namespace {

class CoveringSearch {
public:
    CoveringSearch(const QueryPlan& plan, std::uint64_t budget) : plan_(plan), n_(plan.cols()), budget_(budget) {
        std::map<std::uint32_t, std::size_t> index;
        for (int i = 0; i < plan.rows(); ++i) {
            const auto mask = plan.mask(i);
            auto [it, fresh] = index.try_emplace(mask, groups_.size());
            if (fresh) {
                const int free_cols = n_ - std::popcount(mask);
                groups_.push_back({mask, {}, std::uint64_t{1} << free_cols});
            }
            groups_[it->second].rows.push_back(i);
        }
        remaining_.resize(groups_.size());
        for (std::size_t g = 0; g < groups_.size(); ++g) remaining_[g] = static_cast<int>(groups_[g].rows.size());
        full_ = static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1);
    }

    std::optional<CoveringAssignment> run() {
        std::vector<std::uint64_t> covered(((std::size_t{1} << n_) + 63) / 64, 0);
        if (!search(covered, std::uint64_t{1} << n_)) return std::nullopt;

        CoveringAssignment out;
        out.columns = plan_.per_row();
        out.values.resize(static_cast<std::size_t>(plan_.rows()));
        for (int i = 0; i < plan_.rows(); ++i) out.values[static_cast<std::size_t>(i)].assign(plan_.columns(i).size(), 0);
        std::vector<std::size_t> next(groups_.size(), 0);
        for (const auto& [g, pattern] : chosen_) {
            const int row = groups_[g].rows[next[g]++];
            const auto& cols = plan_.columns(row);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                out.values[static_cast<std::size_t>(row)][k] = (pattern & column_mask(cols[k], n_)) ? 1 : 0;
            }
        }
        return out;
    }

private:
    struct Group {
        std::uint32_t mask;
        std::vector<int> rows;
        std::uint64_t cube;
    };

    bool search(const std::vector<std::uint64_t>& covered, std::uint64_t uncovered) {
        if (uncovered == 0) return true;
        if (++nodes_ > budget_) throw BudgetExceeded("covering search exceeded its node budget");
        std::uint64_t capacity = 0;
        for (std::size_t g = 0; g < groups_.size(); ++g) capacity += groups_[g].cube * static_cast<std::uint64_t>(remaining_[g]);
        if (capacity < uncovered) return false;

        std::uint32_t v = 0;
        for (std::size_t w = 0; w < covered.size(); ++w) {
            if (~covered[w]) {
                v = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_one(covered[w])));
                break;
            }
        }
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            if (remaining_[g] == 0) continue;
            const std::uint32_t fixed = v & groups_[g].mask;
            const std::uint32_t free = full_ & ~groups_[g].mask;
            auto next = covered;
            std::uint64_t added = 0;
            std::uint32_t s = 0;
            while (true) {
                const std::uint32_t w = fixed | s;
                auto& word = next[w / 64];
                const std::uint64_t bit = std::uint64_t{1} << (w % 64);
                if (!(word & bit)) {
                    word |= bit;
                    ++added;
                }
                if (s == free) break;
                s = ((s | ~free) + 1) & free;
            }
            --remaining_[g];
            chosen_.emplace_back(g, fixed);
            if (search(next, uncovered - added)) return true;
            chosen_.pop_back();
            ++remaining_[g];
        }
        return false;
    }

    const QueryPlan& plan_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint32_t full_ = 0;
    std::vector<Group> groups_;
    std::vector<int> remaining_;
    std::vector<std::pair<std::size_t, std::uint32_t>> chosen_;
};

}  // namespace

std::optional<CoveringAssignment> covering_exists(const QueryPlan& plan, std::uint64_t node_budget) {
    if (plan.cols() > 12) throw BudgetExceeded("covering search is limited to n <= 12");
    return CoveringSearch(plan, node_budget).run();
}

// ---------------------------------------------------------------------------
// f(n, m)

int oblivious_game_value(const GameParams& params) {
    if (params.regime() == Regime::large) throw GameError("f(n,m) is defined for m < 2^n");
    if (params.n() > 3 || params.m() > 6) throw BudgetExceeded("f(n,m) oracle is limited to n <= 3, m <= 6");
    const int n = params.n();
    const int m = params.m();
    const std::uint32_t subsets = std::uint32_t{1} << n;

    // Rows are exchangeable, so plans are non-decreasing sequences of column masks.
    std::map<int, std::vector<std::vector<std::uint32_t>>> by_total;
    std::vector<std::uint32_t> current;
    std::function<void(std::uint32_t, int)> gen = [&](std::uint32_t from, int total) {
        if (static_cast<int>(current.size()) == m) {
            by_total[total].push_back(current);
            return;
        }
        for (std::uint32_t s = from; s < subsets; ++s) {
            current.push_back(s);
            gen(s, total + std::popcount(s));
            current.pop_back();
        }
    };
    gen(0, 0);

    for (const auto& [total, plans] : by_total) {
        for (const auto& masks : plans) {
            std::vector<std::vector<int>> rows;
            for (auto mask : masks) {
                std::vector<int> cols;
                for (int j = 0; j < n; ++j) {
                    if (mask & column_mask(j, n)) cols.push_back(j);
                }
                rows.push_back(std::move(cols));
            }
            if (!covering_exists(QueryPlan(n, std::move(rows)))) return total;
        }
    }
    throw GameError("no winning oblivious plan found");
}

// ---------------------------------------------------------------------------
// g(n, m)

namespace {

// Row state: known mask in the high n bits, known values in the low n bits.
class AdaptiveGameSolver {
public:
    AdaptiveGameSolver(int m, int n) : m_(m), n_(n), full_((1U << n) - 1) {}

    int solve() { return value(std::vector<std::uint32_t>(static_cast<std::size_t>(m_), 0)); }

private:
    std::uint32_t mask_of(std::uint32_t row) const { return row >> n_; }
    std::uint32_t bits_of(std::uint32_t row) const { return row & full_; }

    bool can_claim(const std::vector<std::uint32_t>& rows) const {
        for (std::uint32_t u = 0; u <= full_; ++u) {
            bool ok = true;
            for (auto r : rows) {
                if (((u ^ bits_of(r)) & mask_of(r)) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }

    std::uint64_t key(const std::vector<std::uint32_t>& rows) const {
        std::uint64_t k = 0;
        for (auto r : rows) k = (k << (2 * n_)) | r;
        return k;
    }

    int value(std::vector<std::uint32_t> rows) {
        std::sort(rows.begin(), rows.end());
        const auto k = key(rows);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;

        int best = 0;
        if (!can_claim(rows)) {
            best = m_ * n_ + 1;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i > 0 && rows[i] == rows[i - 1]) continue;
                for (int j = 0; j < n_; ++j) {
                    const std::uint32_t col = 1U << (n_ - 1 - j);
                    if (mask_of(rows[i]) & col) continue;
                    int worst = 0;
                    for (std::uint32_t b = 0; b < 2 && worst + 1 < best; ++b) {
                        auto next = rows;
                        next[i] = ((mask_of(rows[i]) | col) << n_) | bits_of(rows[i]) | (b ? col : 0);
                        worst = std::max(worst, value(std::move(next)));
                    }
                    best = std::min(best, worst + 1);
                }
            }
        }
        memo_.emplace(k, best);
        return best;
    }

    int m_;
    int n_;
    std::uint32_t full_;
    std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

int adaptive_game_value(const GameParams& params) {
    if (params.regime() == Regime::large) throw GameError("g(n,m) is defined for m < 2^n");
    if (params.n() > 3 || params.m() > 5) throw BudgetExceeded("g(n,m) oracle is limited to n <= 3, m <= 5");
    return AdaptiveGameSolver(params.m(), params.n()).solve();
}

// ---------------------------------------------------------------------------
// Hypercube matchings and cube covers

std::optional<std::vector<HypercubeEdge>> edge_matching(const std::vector<int>& directions, int n) {
    if (n < 1 || n > 4) throw BudgetExceeded("edge matching search is limited to n <= 4");
    const std::size_t d = directions.size();
    if (d > (std::size_t{1} << (n - 1))) throw GameError("more directions than 2^(n-1)");
    for (int j : directions) {
        if (j < 0 || j >= n) throw GameError("direction out of range");
    }
    std::vector<int> dirs = directions;
    std::sort(dirs.begin(), dirs.end());

    const std::uint32_t vertices = 1U << n;
    std::vector<HypercubeEdge> chosen;
    std::uint32_t used = 0;  // bit per vertex

    std::function<bool(std::size_t, std::uint32_t)> place = [&](std::size_t k, std::uint32_t from) -> bool {
        if (k == d) return true;
        const int dir = dirs[k];
        const std::uint32_t bit = column_mask(dir, n);
        // Equal directions are placed in increasing order of their low end.
        const std::uint32_t start = (k > 0 && dirs[k - 1] == dir) ? from : 0;
        for (std::uint32_t low = start; low < vertices; ++low) {
            if (low & bit) continue;
            const std::uint32_t high = low | bit;
            if ((used >> low) & 1U || (used >> high) & 1U) continue;
            used |= (1U << low) | (1U << high);
            chosen.push_back({low, dir});
            if (place(k + 1, low + 1)) return true;
            chosen.pop_back();
            used &= ~((1U << low) | (1U << high));
        }
        return false;
    };
    if (!place(0, 0)) return std::nullopt;

    // Report edges in the caller's direction order.
    std::vector<HypercubeEdge> out;
    std::vector<bool> taken(chosen.size(), false);
    for (int j : directions) {
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            if (!taken[k] && chosen[k].dir == j) {
                taken[k] = true;
                out.push_back(chosen[k]);
                break;
            }
        }
    }
    return out;
}

std::optional<CubeCover> cube_cover_search(const std::vector<std::vector<int>>& sets, int n) {
    if (n < 1 || n > 4) throw BudgetExceeded("cube cover search is limited to n <= 4");
    const std::uint32_t full = (1U << n) - 1;
    int d = 0;
    std::vector<std::uint32_t> masks;
    for (const auto& s : sets) {
        if (s.empty()) throw GameError("cube cover sets must be nonempty");
        std::uint32_t mask = 0;
        for (int j : s) {
            if (j < 0 || j >= n) throw GameError("cube cover column out of range");
            mask |= column_mask(j, n);
        }
        if (std::popcount(mask) != static_cast<int>(s.size())) throw GameError("repeated column in a cube set");
        masks.push_back(mask);
        d += static_cast<int>(s.size());
    }
    if (d >= (1 << (n - 1))) throw GameError("cube cover search needs sum |J_i| < 2^(n-1)");
    const int q = static_cast<int>(sets.size());
    const int target = d + q;

    // Each placement as a set of vertices (bit per vertex, 2^n <= 16 bits).
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> options(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        const std::uint32_t fixed_cols = full & ~masks[i];
        std::uint32_t b = 0;
        while (true) {
            std::uint32_t verts = 0;
            std::uint32_t s = 0;
            while (true) {
                verts |= 1U << (b | s);
                if (s == masks[i]) break;
                s = ((s | ~masks[i]) + 1) & masks[i];
            }
            options[i].emplace_back(b, verts);
            if (b == fixed_cols) break;
            b = ((b | ~fixed_cols) + 1) & fixed_cols;
        }
    }
    std::vector<int> suffix(masks.size() + 1, 0);
    for (std::size_t i = masks.size(); i-- > 0;) suffix[i] = suffix[i + 1] + (1 << std::popcount(masks[i]));

    std::vector<CubePlacement> chosen(masks.size());
    std::function<bool(std::size_t, std::uint32_t)> place = [&](std::size_t i, std::uint32_t covered) -> bool {
        const int have = std::popcount(covered);
        if (have >= target) {
            // Remaining cubes can go anywhere.
            for (std::size_t k = i; k < masks.size(); ++k) chosen[k] = {options[k][0].first, masks[k]};
            return true;
        }
        if (i == masks.size() || have + suffix[i] < target) return false;
        for (const auto& [base, verts] : options[i]) {
            chosen[i] = {base, masks[i]};
            if (place(i + 1, covered | verts)) return true;
        }
        return false;
    };
    if (!place(0, 0)) return std::nullopt;

    CubeCover out;
    out.cubes = chosen;
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (const auto& [base, verts] : options[i]) {
            if (base == chosen[i].base) covered |= verts;
        }
    }
    out.union_size = std::popcount(covered);
    return out;
}

// ---------------------------------------------------------------------------
// Completions

void for_each_completion(const PartialMatrix& L, const std::function<bool(const std::vector<std::uint32_t>&)>& f) {
    std::vector<Query> unknown;
    for (int i = 0; i < L.rows(); ++i) {
        for (int j = 0; j < L.cols(); ++j) {
            if (L.at(i, j) == Cell::unknown) unknown.push_back({i, j});
        }
    }
    if (unknown.size() > 24) throw BudgetExceeded("too many unknown cells to enumerate completions");
    std::vector<std::uint32_t> base(static_cast<std::size_t>(L.rows()));
    for (int i = 0; i < L.rows(); ++i) base[static_cast<std::size_t>(i)] = L.known_bits(i);
    const std::uint64_t total = std::uint64_t{1} << unknown.size();
    std::vector<std::uint32_t> rows;
    for (std::uint64_t a = 0; a < total; ++a) {
        rows = base;
        for (std::size_t k = 0; k < unknown.size(); ++k) {
            if ((a >> k) & 1U) rows[static_cast<std::size_t>(unknown[k].row)] |= column_mask(unknown[k].col, L.cols());
        }
        if (f(rows)) return;
    }
}

bool completion_covers_cube(const PartialMatrix& L) {
    if (L.cols() > 4) throw BudgetExceeded("completion sweep is limited to n <= 4");
    const std::uint32_t vectors = 1U << L.cols();
    const std::size_t states = std::size_t{1} << vectors;
    std::vector<char> reach(states, 0);
    reach[0] = 1;
    for (int i = 0; i < L.rows(); ++i) {
        std::vector<char> next = reach;
        for (std::size_t s = 0; s < states; ++s) {
            if (!reach[s]) continue;
            for (std::uint32_t w = 0; w < vectors; ++w) {
                if (L.row_compatible(i, w)) next[s | (std::size_t{1} << w)] = 1;
            }
        }
        reach = std::move(next);
    }
    return reach[states - 1] != 0;
}

}  // namespace diaggames
