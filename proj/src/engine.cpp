#include "diaggames/engine.hpp"

#include <set>

namespace diaggames {

const char* to_string(Winner w) { return w == Winner::cantor ? "cantor" : "kronecker"; }

namespace {

void check_claim_kind(const Claim& claim, const GameParams& params) {
    const bool search = std::holds_alternative<SearchClaim>(claim);
    if (search == (params.regime() == Regime::large)) {
        throw GameError(search ? "search claim in the m >= 2^n regime" : "decision claim outside the m >= 2^n regime");
    }
}

}  // namespace

Transcript play_adaptive(CantorStrategy& cantor, Adversary& adversary, const GameParams& params) {
    Transcript t(params);
    PartialMatrix L(params);
    const auto cap = static_cast<std::uint64_t>(params.m()) * static_cast<std::uint64_t>(params.n());
    while (true) {
        auto step = cantor.next_query();
        if (auto* claim = std::get_if<Claim>(&step)) {
            check_claim_kind(*claim, params);
            t.claim = *claim;
            return t;
        }
        const Query q = std::get<Query>(step);
        L.check_query(q);
        if (L.at(q) != Cell::unknown) {
            throw GameError("duplicate query (" + std::to_string(q.row + 1) + "," + std::to_string(q.col + 1) + ")");
        }
        if (t.events.size() >= cap) throw GameError("strategy exceeded m*n queries");
        const int bit = adversary.answer(q);
        L.set(q, bit);
        t.events.push_back({q, bit});
        cantor.observe(bit);
    }
}

Transcript play_oblivious(const QueryPlan& plan, const ObliviousOutput& output, Adversary& adversary,
                          const GameParams& params) {
    if (plan.rows() != params.m() || plan.cols() != params.n()) throw GameError("plan does not match the game size");
    if (params.regime() == Regime::large) throw GameError("the oblivious search game needs m < 2^n");
    adversary.observe_plan(plan);
    Transcript t(params);
    PartialMatrix L(params);
    for (const Query q : plan.queries()) {
        const int bit = adversary.answer(q);
        L.set(q, bit);
        t.events.push_back({q, bit});
    }
    t.claim = SearchClaim{output(plan, L)};
    return t;
}

Winner judge_search(const Transcript& t) {
    if (!t.claim || !std::holds_alternative<SearchClaim>(*t.claim)) throw GameError("transcript has no search claim");
    const auto& u = std::get<SearchClaim>(*t.claim).u;
    if (u.size() != t.params.n()) throw GameError("claimed vector has the wrong length");
    const PartialMatrix L = t.replay();
    for (int i = 0; i < L.rows(); ++i) {
        if (!L.row_excludes(i, u.code())) return Winner::kronecker;
    }
    return Winner::cantor;
}

Winner judge_decision(const Transcript& t) {
    if (t.params.regime() != Regime::large) throw GameError("decision claims are judged only when m >= 2^n");
    if (!t.claim || !std::holds_alternative<DecisionClaim>(*t.claim)) throw GameError("transcript has no decision claim");
    const auto& claim = std::get<DecisionClaim>(*t.claim);
    const PartialMatrix L = t.replay();
    if (claim.complete) return is_complete(L) ? Winner::cantor : Winner::kronecker;
    if (!claim.witness || claim.witness->size() != L.cols()) return Winner::kronecker;
    for (int i = 0; i < L.rows(); ++i) {
        if (!L.row_excludes(i, claim.witness->code())) return Winner::kronecker;
    }
    return Winner::cantor;
}

Winner judge(const Transcript& t) {
    if (!t.claim) throw GameError("transcript has no claim");
    return std::holds_alternative<SearchClaim>(*t.claim) ? judge_search(t) : judge_decision(t);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Query> row_major_cells(const GameParams& p) {
    std::vector<Query> out;
    for (int i = 0; i < p.m(); ++i) {
        for (int j = 0; j < p.n(); ++j) out.push_back({i, j});
    }
    return out;
}

}  // namespace

std::vector<Query> shuffled_cells(const GameParams& params, std::uint64_t seed) {
    // Hand-rolled Fisher-Yates so the order is identical on every standard library.
    auto cells = row_major_cells(params);
    std::mt19937_64 rng(seed);
    for (std::size_t i = cells.size(); i > 1; --i) {
        const auto k = static_cast<std::size_t>(rng() % i);
        std::swap(cells[i - 1], cells[k]);
    }
    return cells;
}

ExhaustiveDecisionStrategy::ExhaustiveDecisionStrategy(GameParams params)
    : ExhaustiveDecisionStrategy(params, row_major_cells(params)) {}

ExhaustiveDecisionStrategy::ExhaustiveDecisionStrategy(GameParams params, std::vector<Query> order)
    : matrix_(params), order_(std::move(order)) {
    if (params.regime() != Regime::large) throw GameError("the decision game needs m >= 2^n");
    params.require_enumerable();
    std::set<Query> seen(order_.begin(), order_.end());
    if (seen.size() != order_.size() || seen.size() != static_cast<std::size_t>(params.m()) * static_cast<std::size_t>(params.n())) {
        throw GameError("query order must list every cell exactly once");
    }
}

StrategyStep ExhaustiveDecisionStrategy::next_query() {
    if (pos_ < order_.size()) return order_[pos_];
    const auto fixed = fixed_rows(matrix_);
    DecisionClaim claim;
    claim.complete = fixed.size() == matrix_.params().cube_size();
    if (!claim.complete) {
        std::uint32_t missing = 0;
        while (fixed.count(missing)) ++missing;
        claim.witness = BinaryVector(missing, matrix_.cols());
    }
    return Claim{claim};
}

void ExhaustiveDecisionStrategy::observe(int answer) { matrix_.set(order_[pos_++], answer); }

RandomLegalStrategy::RandomLegalStrategy(GameParams params, std::uint64_t seed)
    : matrix_(params), order_(shuffled_cells(params, seed)) {
    if (params.regime() == Regime::large) throw GameError("the search game needs m < 2^n");
}

StrategyStep RandomLegalStrategy::next_query() {
    if (auto u = first_defeating_vector(matrix_)) return Claim{SearchClaim{*u}};
    if (pos_ >= order_.size()) throw GameError("every cell asked and still no missing vector");
    return order_[pos_];
}

void RandomLegalStrategy::observe(int answer) { matrix_.set(order_[pos_++], answer); }

}  // namespace diaggames
