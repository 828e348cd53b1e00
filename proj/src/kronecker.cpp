#include "diaggames/kronecker.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "diaggames/oracle.hpp"

namespace diaggames {

int balanced_answer(ColumnBalance& state, Query q) {
    if (q.col < 0 || q.col >= static_cast<int>(state.zeros.size())) throw GameError("column out of range");
    auto& zeros = state.zeros[static_cast<std::size_t>(q.col)];
    auto& ones = state.ones[static_cast<std::size_t>(q.col)];
    if (ones < zeros) {
        ++ones;
        return 1;
    }
    ++zeros;
    return 0;
}

bool CoveringAssignment::agrees(int row, std::uint32_t v, int n) const {
    const auto& cols = columns[static_cast<std::size_t>(row)];
    const auto& vals = values[static_cast<std::size_t>(row)];
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (static_cast<int>((v >> (n - 1 - cols[k])) & 1U) != vals[k]) return false;
    }
    return true;
}

bool CoveringAssignment::covers_everything(int n) const {
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t v = 0; v < total; ++v) {
        bool hit = false;
        for (int i = 0; i < rows() && !hit; ++i) hit = agrees(i, v, n);
        if (!hit) return false;
    }
    return true;
}

std::optional<CoveringAssignment> greedy_covering(const QueryPlan& plan) {
    const int n = plan.cols();
    if (n > kMaxEnumerableColumns) throw GameError("greedy covering enumerates {0,1}^n; n is over the cap");

    std::vector<int> order(static_cast<std::size_t>(plan.rows()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return plan.columns(a).size() < plan.columns(b).size(); });

    std::vector<std::uint32_t> uncovered(std::size_t{1} << n);
    std::iota(uncovered.begin(), uncovered.end(), 0U);

    CoveringAssignment out;
    out.columns = plan.per_row();
    out.values.resize(static_cast<std::size_t>(plan.rows()));

    auto project = [n](std::uint32_t v, const std::vector<int>& cols) {
        std::uint32_t pattern = 0;
        for (int c : cols) pattern = (pattern << 1) | ((v >> (n - 1 - c)) & 1U);
        return pattern;
    };

    for (int row : order) {
        const auto& cols = plan.columns(row);
        std::vector<std::uint32_t> counts(std::size_t{1} << cols.size(), 0);
        for (auto v : uncovered) ++counts[project(v, cols)];
        const auto best = static_cast<std::uint32_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        auto& vals = out.values[static_cast<std::size_t>(row)];
        for (std::size_t k = 0; k < cols.size(); ++k) {
            vals.push_back(static_cast<int>((best >> (cols.size() - 1 - k)) & 1U));
        }
        std::erase_if(uncovered, [&](std::uint32_t v) { return project(v, cols) == best; });
    }
    if (!uncovered.empty()) return std::nullopt;
    return out;
}

void CoveringAdversary::observe_plan(const QueryPlan& plan) {
    n_ = plan.cols();
    assignment_ = greedy_covering(plan);
    if (!assignment_ && n_ <= 4) assignment_ = covering_exists(plan);
}

int CoveringAdversary::answer(Query q) {
    if (!assignment_) return 0;
    const auto& cols = assignment_->columns.at(static_cast<std::size_t>(q.row));
    const auto it = std::find(cols.begin(), cols.end(), q.col);
    if (it == cols.end()) return 0;
    return assignment_->values[static_cast<std::size_t>(q.row)][static_cast<std::size_t>(it - cols.begin())];
}

std::optional<int> CoveringAdversary::refuting_row(const BinaryVector& u) const {
    if (!assignment_) return std::nullopt;
    for (int i = 0; i < assignment_->rows(); ++i) {
        if (assignment_->agrees(i, u.code(), n_)) return i;
    }
    return std::nullopt;
}

ZeroFirstAdversary::ZeroFirstAdversary(const GameParams& params) : state_(PartialMatrix(params)) {
    const auto m = static_cast<std::uint64_t>(params.m());
    if (m > params.cube_size()) free_prefix_ = m - params.cube_size();
}

int ZeroFirstAdversary::answer(Query q) {
    // While at least 2^n rows are untouched, no reveal can block L.
    int bit = 0;
    if (answered_ >= free_prefix_ && !state_.keeps_size(q, 0)) bit = 1;
    const int before = state_.size();
    if (state_.assign(q, bit) < before && state_.matrix().params().regime() == Regime::large) {
        throw GameError("zero-first adversary reached a blocked matrix");
    }
    ++answered_;
    return bit;
}

int zero_first_answer(const PartialMatrix& L, Query q) {
    if (L.params().regime() != Regime::large) throw GameError("the zero-first rule needs m >= 2^n");
    auto state = is_unblocked(L);
    if (!state) throw GameError("zero-first rule applied to a blocked matrix");
    return state->keeps_size(q, 0) ? 0 : 1;
}

bool non_essential_rows_all_zero(const PartialMatrix& final_matrix) {
    std::map<std::uint32_t, int> counts;
    for (int i = 0; i < final_matrix.rows(); ++i) {
        if (!final_matrix.row_fixed(i)) throw GameError("matrix is not fully revealed");
        ++counts[final_matrix.known_bits(i)];
    }
    return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.first == 0 || kv.second == 1; });
}

}  // namespace diaggames
