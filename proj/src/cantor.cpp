#include "diaggames/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace diaggames {

QueryPlan::QueryPlan(int n, std::vector<std::vector<int>> per_row) : n_(n), per_row_(std::move(per_row)) {
    if (n < 1 || n > kMaxColumns) throw GameError("plan width out of range");
    for (auto& cols : per_row_) {
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
            throw GameError("plan repeats a column within a row");
        }
        for (int c : cols) {
            if (c < 0 || c >= n) throw GameError("plan column out of range");
        }
    }
}

std::uint32_t QueryPlan::mask(int row) const {
    std::uint32_t out = 0;
    for (int c : columns(row)) out |= column_mask(c, n_);
    return out;
}

std::uint64_t QueryPlan::total_size() const {
    std::uint64_t total = 0;
    for (const auto& cols : per_row_) total += cols.size();
    return total;
}

std::vector<Query> QueryPlan::queries() const {
    std::vector<Query> out;
    for (int i = 0; i < rows(); ++i) {
        for (int c : columns(i)) out.push_back({i, c});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagonalization

DiagonalStrategy::DiagonalStrategy(GameParams params)
    : params_(params), u_(static_cast<std::size_t>(params.n()), 0) {
    if (params.regime() != Regime::small) throw GameError("diagonalization needs m <= n");
}

StrategyStep DiagonalStrategy::next_query() {
    if (next_row_ < params_.m()) {
        awaiting_ = true;
        return Query{next_row_, next_row_};
    }
    return Claim{SearchClaim{BinaryVector::from_bits(u_)}};
}

void DiagonalStrategy::observe(int answer) {
    if (!awaiting_) throw GameError("answer received with no query outstanding");
    u_[static_cast<std::size_t>(next_row_)] = 1 - answer;
    ++next_row_;
    awaiting_ = false;
}

// ---------------------------------------------------------------------------
// Adaptive 2m - n recursion

int choose_x(int m_alive, int n_left) {
    if (n_left < 1 || n_left >= 31) throw GameError("choose_x: column count out of range");
    const std::int64_t cube = std::int64_t{1} << n_left;
    if (!(n_left < m_alive && m_alive < cube)) {
        throw GameError("choose_x needs n' < m' < 2^n'");
    }
    const std::int64_t half = cube / 2;
    if (m_alive <= half) return 1;
    return static_cast<int>(m_alive - half + 1);
}

AdaptiveStrategy::AdaptiveStrategy(GameParams params)
    : params_(params), u_(static_cast<std::size_t>(params.n()), 0) {
    if (params.regime() != Regime::mid) throw GameError("the adaptive recursion needs n < m < 2^n");
    alive_.resize(static_cast<std::size_t>(params.m()));
    for (int i = 0; i < params.m(); ++i) alive_[static_cast<std::size_t>(i)] = i;
    start_column();
}

void AdaptiveStrategy::start_column() {
    pending_.clear();
    answers_.clear();
    pending_pos_ = 0;
    const int n_left = params_.n() - col_;
    const int alive = static_cast<int>(alive_.size());
    if (alive <= n_left) {
        diagonal_tail_ = true;
        for (int k = 0; k < alive; ++k) pending_.push_back({alive_[static_cast<std::size_t>(k)], col_ + k});
        return;
    }
    x_ = choose_x(alive, n_left);
    for (int k = 0; k < 2 * x_ - 1; ++k) pending_.push_back({alive_[static_cast<std::size_t>(k)], col_});
}

StrategyStep AdaptiveStrategy::next_query() {
    if (pending_pos_ < pending_.size()) {
        awaiting_ = true;
        return pending_[pending_pos_];
    }
    return Claim{SearchClaim{BinaryVector::from_bits(u_)}};
}

void AdaptiveStrategy::observe(int answer) {
    if (!awaiting_) throw GameError("answer received with no query outstanding");
    awaiting_ = false;
    const Query q = pending_[pending_pos_++];
    answers_.push_back(answer);
    if (diagonal_tail_) {
        u_[static_cast<std::size_t>(q.col)] = 1 - answer;
        return;
    }
    if (pending_pos_ < pending_.size()) return;

    const auto ones = std::count(answers_.begin(), answers_.end(), 1);
    const int majority = ones >= x_ ? 1 : 0;
    u_[static_cast<std::size_t>(col_)] = 1 - majority;

    // pending_ lists the first 2x-1 alive rows in increasing order, so the
    // first x matches are the lowest-indexed ones.
    std::vector<int> retired;
    for (std::size_t k = 0; k < answers_.size() && static_cast<int>(retired.size()) < x_; ++k) {
        if (answers_[k] == majority) retired.push_back(pending_[k].row);
    }
    std::erase_if(alive_, [&](int r) { return std::find(retired.begin(), retired.end(), r) != retired.end(); });
    ++col_;
    start_column();
}

// ---------------------------------------------------------------------------
// Oblivious plans

std::optional<BinaryVector> first_defeating_vector(const PartialMatrix& L) {
    L.params().require_enumerable();
    const auto total = static_cast<std::uint32_t>(L.params().cube_size());
    for (std::uint32_t v = 0; v < total; ++v) {
        bool defeats = true;
        for (int i = 0; i < L.rows() && defeats; ++i) defeats = L.row_excludes(i, v);
        if (defeats) return BinaryVector(v, L.cols());
    }
    return std::nullopt;
}

int oblivious_block_d_closed_form(const GameParams& params) {
    return oblivious_block_d_closed_form(params.m(), params.n());
}

int oblivious_block_d_closed_form(std::int64_t m, std::int64_t n) {
    if (n < 1 || m <= n) throw GameError("the closed form needs m > n >= 1");
    const double ratio = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    const double lg = std::log2(ratio);
    const double value = lg + 2.0 * std::log2(lg) + 1.0;
    return std::max(1, static_cast<int>(std::ceil(value - 1e-12)));
}

bool block_size_satisfies_bound(int d, int m, int n) {
    if (d < 1 || d >= 62) return d >= 62;
    // 2^d > 2md/n  <=>  n * 2^d > 2md
    return static_cast<long double>(n) * static_cast<long double>(std::uint64_t{1} << d) >
           2.0L * m * d;
}

namespace {

// The block plan needs Eq. (1) and, concretely, every group smaller than 2^d.
bool block_size_feasible(int d, const GameParams& p) {
    if (d < 1 || d > p.n()) return false;
    if (!block_size_satisfies_bound(d, p.m(), p.n())) return false;
    const int groups = p.n() / d;
    const std::int64_t largest = (p.m() + groups - 1) / groups;
    return d >= 62 || largest < (std::int64_t{1} << d);
}

QueryPlan full_plan(const GameParams& p) {
    std::vector<int> all(static_cast<std::size_t>(p.n()));
    for (int j = 0; j < p.n(); ++j) all[static_cast<std::size_t>(j)] = j;
    return QueryPlan(p.n(), std::vector<std::vector<int>>(static_cast<std::size_t>(p.m()), all));
}

void require_mid(const GameParams& p, const char* what) {
    if (p.regime() != Regime::mid) throw GameError(std::string(what) + " needs n < m < 2^n");
}

}  // namespace

std::optional<int> oblivious_block_d(const GameParams& params) {
    require_mid(params, "oblivious_block_d");
    const int start = oblivious_block_d_closed_form(params);
    for (int d = start; d <= params.n(); ++d) {
        if (block_size_feasible(d, params)) return d;
    }
    for (int d = 1; d < std::min(start, params.n() + 1); ++d) {
        if (block_size_feasible(d, params)) return d;
    }
    return std::nullopt;
}

QueryPlan oblivious_plan(const GameParams& params) {
    require_mid(params, "oblivious_plan");
    const int m = params.m();
    const int n = params.n();
    if (m == n + 1) {
        // Three rows share the first two columns; the rest are diagonalized.
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < 3; ++i) rows.push_back({0, 1});
        for (int i = 3; i < m; ++i) rows.push_back({i - 1});
        return QueryPlan(n, std::move(rows));
    }
    if (const auto d = oblivious_block_d(params)) {
        const int groups = n / *d;
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<std::size_t>(m));
        const int base = m / groups;
        const int extra = m % groups;
        for (int g = 0; g < groups; ++g) {
            std::vector<int> block;
            for (int c = 0; c < *d; ++c) block.push_back(g * *d + c);
            const int size = base + (g < extra ? 1 : 0);
            for (int k = 0; k < size; ++k) rows.push_back(block);
        }
        return QueryPlan(n, std::move(rows));
    }
    if (static_cast<std::uint64_t>(m) >= params.cube_size() / 2) return endgame_plan(params);
    return full_plan(params);
}

BinaryVector oblivious_output(const QueryPlan& plan, const PartialMatrix& answers) {
    if (plan.rows() != answers.rows() || plan.cols() != answers.cols()) {
        throw GameError("plan and answer matrix dimensions differ");
    }
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int i = 0; i < plan.rows(); ++i) {
        if (answers.known_mask(i) != plan.mask(i)) {
            throw GameError("answers do not cover exactly the planned cells of row " + std::to_string(i + 1));
        }
        if (plan.columns(i).empty()) {
            throw GameError("row " + std::to_string(i + 1) + " has no planned queries");
        }
        groups[plan.columns(i)].push_back(i);
    }
    std::uint32_t used = 0;
    for (const auto& [block, _] : groups) {
        std::uint32_t m = 0;
        for (int c : block) m |= column_mask(c, plan.cols());
        if (used & m) throw GameError("planned blocks overlap; not a block-structured plan");
        used |= m;
    }

    std::vector<int> u(static_cast<std::size_t>(plan.cols()), 0);
    for (const auto& [block, members] : groups) {
        const auto width = block.size();
        if (width >= 31) throw GameError("block too wide");
        std::vector<bool> realized(std::size_t{1} << width, false);
        for (int r : members) {
            std::uint32_t pattern = 0;
            for (int c : block) pattern = (pattern << 1) | (answers.at(r, c) == Cell::one ? 1U : 0U);
            realized[pattern] = true;
        }
        const auto free = std::find(realized.begin(), realized.end(), false);
        if (free == realized.end()) {
            throw GameError("a group realizes every pattern on its block; the plan is infeasible");
        }
        const auto pattern = static_cast<std::uint32_t>(free - realized.begin());
        for (std::size_t k = 0; k < width; ++k) {
            u[static_cast<std::size_t>(block[k])] = static_cast<int>((pattern >> (width - 1 - k)) & 1U);
        }
    }
    return BinaryVector::from_bits(u);
}

QueryPlan endgame_omission_plan(const GameParams& params) {
    const auto m = static_cast<std::uint64_t>(params.m());
    const auto cube = params.cube_size();
    if (!(cube / 2 <= m && m < cube)) throw GameError("endgame plans need 2^(n-1) <= m < 2^n");
    const auto skipped = static_cast<int>(cube - m - 1);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < params.m(); ++i) {
        std::vector<int> cols;
        for (int j = (i < skipped ? 1 : 0); j < params.n(); ++j) cols.push_back(j);
        rows.push_back(std::move(cols));
    }
    return QueryPlan(params.n(), std::move(rows));
}

QueryPlan endgame_parity_plan(const GameParams& params) {
    if (params.n() < 2 || static_cast<std::uint64_t>(params.m()) != params.cube_size() / 2) {
        throw GameError("the parity plan needs n >= 2 and m = 2^(n-1)");
    }
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < params.m(); ++i) {
        const int omitted = (i + 1 < params.m()) ? 0 : 1;
        std::vector<int> cols;
        for (int j = 0; j < params.n(); ++j) {
            if (j != omitted) cols.push_back(j);
        }
        rows.push_back(std::move(cols));
    }
    return QueryPlan(params.n(), std::move(rows));
}

QueryPlan endgame_plan(const GameParams& params) {
    if (params.n() >= 2 && static_cast<std::uint64_t>(params.m()) == params.cube_size() / 2) {
        return endgame_parity_plan(params);
    }
    return endgame_omission_plan(params);
}

BinaryVector generic_oblivious_output(const QueryPlan& plan, const PartialMatrix& answers) {
    for (int i = 0; i < plan.rows(); ++i) {
        if (answers.known_mask(i) != plan.mask(i)) {
            throw GameError("answers do not cover exactly the planned cells of row " + std::to_string(i + 1));
        }
    }
    auto u = first_defeating_vector(answers);
    if (!u) throw GameError("no vector defeats every row under these answers");
    return *u;
}

bool is_block_structured(const QueryPlan& plan) {
    std::set<std::uint32_t> blocks;
    for (int i = 0; i < plan.rows(); ++i) blocks.insert(plan.mask(i));
    std::uint32_t used = 0;
    for (auto b : blocks) {
        if (b == 0 || (used & b)) return false;
        used |= b;
    }
    return true;
}

BinaryVector plan_output(const QueryPlan& plan, const PartialMatrix& answers) {
    return is_block_structured(plan) ? oblivious_output(plan, answers) : generic_oblivious_output(plan, answers);
}

}  // namespace diaggames
