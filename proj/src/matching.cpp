#include "diaggames/matching.hpp"

#include <deque>

namespace diaggames {

namespace {

constexpr Query kNoQuery{-1, -1};

// Ascending enumeration of the completions of a row: fixed bits plus every
// submask of the free columns.
template <class F>
bool for_each_completion(std::uint32_t fixed_bits, std::uint32_t free_mask, F&& f) {
    std::uint32_t s = 0;
    while (true) {
        if (f(fixed_bits | s)) return true;
        if (s == free_mask) return false;
        s = ((s | ~free_mask) + 1) & free_mask;
    }
}

}  // namespace

MatchingState::MatchingState(PartialMatrix L) : matrix_(std::move(L)) {
    matrix_.params().require_enumerable();
    const auto vectors = static_cast<std::uint32_t>(matrix_.params().cube_size());
    row_of_.assign(vectors, -1);
    vector_of_.assign(static_cast<std::size_t>(matrix_.rows()), -1);

    // Vector k starts on row k, which is always valid for an untouched matrix.
    const auto seed = std::min<std::uint64_t>(vectors, static_cast<std::uint64_t>(matrix_.rows()));
    for (std::uint32_t k = 0; k < seed; ++k) {
        const int r = static_cast<int>(k);
        if (matrix_.row_compatible(r, k)) {
            row_of_[k] = r;
            vector_of_[static_cast<std::size_t>(r)] = k;
            ++size_;
        }
    }
    if (static_cast<std::uint64_t>(matrix_.rows()) <= vectors) {
        for (int r = 0; r < matrix_.rows(); ++r) {
            if (vector_of_[static_cast<std::size_t>(r)] < 0 && augment_from_row(r)) ++size_;
        }
    } else {
        for (std::uint32_t v = 0; v < vectors; ++v) {
            if (row_of_[v] < 0 && augment_from_vector(v)) ++size_;
        }
    }
}

bool MatchingState::adjacent(int row, std::uint32_t v, Query pending, int pending_bit) const {
    if (!matrix_.row_compatible(row, v)) return false;
    if (row != pending.row) return true;
    const auto mask = column_mask(pending.col, matrix_.cols());
    return ((v & mask) != 0) == (pending_bit == 1);
}

// Both searches run against the matching with the pending row's edge removed:
// `pending.row` and its former partner count as free.

std::optional<MatchingState::Path> MatchingState::path_from_row(int start, Query pending,
                                                                int pending_bit) const {
    const int n = matrix_.cols();
    const std::int64_t broken_vec = pending.row >= 0 ? vector_of(pending.row) : -1;
    auto partner_row = [&](std::uint32_t w) { return static_cast<std::int64_t>(w) == broken_vec ? -1 : row_of_[w]; };

    std::vector<int> parent(row_of_.size(), -2);  // row that reached the vector
    std::deque<int> queue{start};
    std::optional<std::uint32_t> found;
    while (!queue.empty() && !found) {
        const int r = queue.front();
        queue.pop_front();
        std::uint32_t known = matrix_.known_mask(r);
        std::uint32_t bits = matrix_.known_bits(r);
        if (r == pending.row) {
            const auto mask = column_mask(pending.col, n);
            known |= mask;
            if (pending_bit) bits |= mask;
        }
        const std::uint32_t full = static_cast<std::uint32_t>(row_of_.size() - 1);
        for_each_completion(bits, full & ~known, [&](std::uint32_t w) {
            if (parent[w] != -2) return false;
            parent[w] = r;
            const int next = partner_row(w);
            if (next < 0) {
                found = w;
                return true;
            }
            queue.push_back(next);
            return false;
        });
    }
    if (!found) return std::nullopt;

    Path p;
    std::uint32_t w = *found;
    while (true) {
        const int r = parent[w];
        p.pairs.emplace_back(r, w);
        if (r == start) break;
        w = static_cast<std::uint32_t>(vector_of(r));
    }
    return p;
}

std::optional<MatchingState::Path> MatchingState::path_from_vector(std::uint32_t start, int skip_row,
                                                                   Query pending, int pending_bit) const {
    const std::int64_t broken_vec = pending.row >= 0 ? vector_of(pending.row) : -1;
    auto partner_vec = [&](int r) -> std::int64_t { return r == pending.row ? -1 : vector_of(r); };

    std::vector<std::int64_t> parent(static_cast<std::size_t>(matrix_.rows()), -2);  // vector that reached the row
    std::vector<char> seen(row_of_.size(), 0);
    seen[start] = 1;
    std::deque<std::uint32_t> queue{start};
    int found = -1;
    while (!queue.empty() && found < 0) {
        const std::uint32_t w = queue.front();
        queue.pop_front();
        for (int r = 0; r < matrix_.rows(); ++r) {
            if (parent[static_cast<std::size_t>(r)] != -2 || !adjacent(r, w, pending, pending_bit)) continue;
            parent[static_cast<std::size_t>(r)] = w;
            const auto next = partner_vec(r);
            if (next < 0) {
                if (r == skip_row) continue;
                found = r;
                break;
            }
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                queue.push_back(static_cast<std::uint32_t>(next));
            }
        }
    }
    if (found < 0) return std::nullopt;

    Path p;
    int r = found;
    while (true) {
        const auto w = static_cast<std::uint32_t>(parent[static_cast<std::size_t>(r)]);
        p.pairs.emplace_back(r, w);
        if (w == start) break;
        r = (static_cast<std::int64_t>(w) == broken_vec) ? -1 : row_of_[w];
    }
    return p;
}

std::optional<MatchingState::Path> MatchingState::repair_path(Query pending, int pending_bit) const {
    const auto v0 = vector_of(pending.row);
    if (auto p = path_from_row(pending.row, pending, pending_bit)) return p;
    return path_from_vector(static_cast<std::uint32_t>(v0), pending.row, pending, pending_bit);
}

bool MatchingState::keeps_size(Query q, int bit) const {
    matrix_.check_query(q);
    if (matrix_.at(q) != Cell::unknown) throw GameError("cell is already known");
    const auto v0 = vector_of(q.row);
    if (v0 < 0 || adjacent(q.row, static_cast<std::uint32_t>(v0), q, bit)) return true;
    return repair_path(q, bit).has_value();
}

int MatchingState::assign(Query q, int bit) {
    matrix_.check_query(q);
    if (matrix_.at(q) != Cell::unknown) throw GameError("cell is already known");
    const auto v0 = vector_of(q.row);
    if (v0 < 0 || adjacent(q.row, static_cast<std::uint32_t>(v0), q, bit)) {
        matrix_.set(q, bit);
        return size_;
    }
    auto path = repair_path(q, bit);
    matrix_.set(q, bit);
    row_of_[static_cast<std::size_t>(v0)] = -1;
    vector_of_[static_cast<std::size_t>(q.row)] = -1;
    --size_;
    if (path) {
        apply(*path);
        ++size_;
    }
    return size_;
}

bool MatchingState::augment_from_row(int row) {
    auto p = path_from_row(row, kNoQuery, 0);
    if (p) apply(*p);
    return p.has_value();
}

bool MatchingState::augment_from_vector(std::uint32_t v) {
    auto p = path_from_vector(v, -1, kNoQuery, 0);
    if (p) apply(*p);
    return p.has_value();
}

void MatchingState::apply(const Path& p) {
    for (const auto& [r, w] : p.pairs) {
        row_of_[w] = r;
        vector_of_[static_cast<std::size_t>(r)] = w;
    }
}

bool MatchingState::valid() const {
    int count = 0;
    for (std::uint32_t w = 0; w < row_of_.size(); ++w) {
        const int r = row_of_[w];
        if (r < 0) continue;
        ++count;
        if (vector_of(r) != static_cast<std::int64_t>(w)) return false;
        if (!matrix_.row_compatible(r, w)) return false;
    }
    for (int r = 0; r < matrix_.rows(); ++r) {
        const auto w = vector_of(r);
        if (w >= 0 && row_of_[static_cast<std::size_t>(w)] != r) return false;
    }
    return count == size_;
}

std::optional<MatchingState> is_unblocked(const PartialMatrix& L) {
    MatchingState s(L);
    if (!s.saturates_vectors()) return std::nullopt;
    return s;
}

std::optional<MatchingState> try_set_and_repair(MatchingState S, Query q, int bit) {
    S.assign(q, bit);
    if (!S.saturates_vectors()) return std::nullopt;
    return S;
}

}  // namespace diaggames
