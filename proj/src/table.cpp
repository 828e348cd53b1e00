// Experiment tables: one game per (n, m) cell of a scenario.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "diaggames/engine.hpp"
#include "diaggames/oracle.hpp"

namespace diaggames {

namespace {

std::optional<int> adaptive_oracle(const GameParams& p) {
    if (p.n() > 3 || p.m() > 5 || p.regime() == Regime::large) return std::nullopt;
    return adaptive_game_value(p);
}

std::optional<int> oblivious_oracle(const GameParams& p) {
    if (p.n() > 3 || p.m() > 6 || p.regime() == Regime::large) return std::nullopt;
    return oblivious_game_value(p);
}

QueryPlan diagonal_plan(const GameParams& p) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < p.m(); ++i) rows.push_back({i});
    return QueryPlan(p.n(), std::move(rows));
}

TableRow finish(const GameParams& p, const std::string& scenario, const Transcript& t) {
    TableRow row;
    row.n = p.n();
    row.m = p.m();
    row.scenario = scenario;
    row.queries = t.events.size();
    row.winner = judge(t);
    return row;
}

std::optional<TableRow> run_cell(const std::string& scenario, int n, int m) {
    const GameParams p(m, n);
    const auto mn = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
    const auto cube = p.cube_size();

    if (scenario == "diagonal") {
        if (p.regime() != Regime::small) return std::nullopt;
        DiagonalStrategy cantor(p);
        BalancedAdversary kronecker(n);
        auto row = finish(p, scenario, play_adaptive(cantor, kronecker, p));
        row.formula = static_cast<std::uint64_t>(m);
        row.oracle = adaptive_oracle(p);
        return row;
    }
    if (scenario == "adaptive") {
        if (p.regime() == Regime::large) return std::nullopt;
        BalancedAdversary kronecker(n);
        Transcript t(p);
        if (p.regime() == Regime::small) {
            DiagonalStrategy cantor(p);
            t = play_adaptive(cantor, kronecker, p);
        } else {
            AdaptiveStrategy cantor(p);
            t = play_adaptive(cantor, kronecker, p);
        }
        auto row = finish(p, scenario, t);
        row.formula = static_cast<std::uint64_t>(m <= n ? m : 2 * m - n);
        row.oracle = adaptive_oracle(p);
        return row;
    }
    if (scenario == "oblivious" || scenario == "oblivious-tiny") {
        if (p.regime() == Regime::large) return std::nullopt;
        if (scenario == "oblivious-tiny" && (n > 3 || m > 6)) return std::nullopt;
        const QueryPlan plan = p.regime() == Regime::small ? diagonal_plan(p) : oblivious_plan(p);
        CoveringAdversary kronecker;
        auto row = finish(p, scenario, play_oblivious(plan, plan_output, kronecker, p));
        if (p.regime() == Regime::small) {
            row.formula = static_cast<std::uint64_t>(m);
        } else {
            row.formula = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(oblivious_block_d_closed_form(p));
        }
        row.oracle = oblivious_oracle(p);
        return row;
    }
    if (scenario == "endgame") {
        if (!(cube / 2 <= static_cast<std::uint64_t>(m) && static_cast<std::uint64_t>(m) < cube)) return std::nullopt;
        const QueryPlan plan = endgame_plan(p);
        CoveringAdversary kronecker;
        auto row = finish(p, scenario, play_oblivious(plan, plan_output, kronecker, p));
        const bool parity = n >= 2 && static_cast<std::uint64_t>(m) == cube / 2;
        row.formula = parity ? mn - cube / 2 : mn - (cube - static_cast<std::uint64_t>(m) - 1);
        row.oracle = oblivious_oracle(p);
        return row;
    }
    if (scenario == "zero_first" || scenario == "zero-first") {
        if (p.regime() != Regime::large) return std::nullopt;
        ExhaustiveDecisionStrategy cantor(p);
        ZeroFirstAdversary kronecker(p);
        auto row = finish(p, scenario, play_adaptive(cantor, kronecker, p));
        row.formula = mn;
        return row;
    }
    throw GameError("unknown scenario '" + scenario + "'");
}

}  // namespace

const std::vector<std::string>& table_scenarios() {
    static const std::vector<std::string> names{"diagonal", "adaptive", "oblivious", "oblivious-tiny", "endgame",
                                                "zero_first"};
    return names;
}

std::vector<TableRow> run_table(const std::string& scenario, IntRange n_range, IntRange m_range, int jobs) {
    const auto& names = table_scenarios();
    if (std::find(names.begin(), names.end(), scenario) == names.end() && scenario != "zero-first") {
        throw GameError("unknown scenario '" + scenario + "'");
    }
    std::vector<std::pair<int, int>> cells;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int m = m_range.lo; m <= m_range.hi; ++m) cells.emplace_back(n, m);
    }
    std::vector<std::optional<TableRow>> results(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= cells.size()) return;
            try {
                results[k] = run_cell(scenario, cells[k].first, cells[k].second);
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<TableRow> out;
    for (auto& r : results) {
        if (r) out.push_back(std::move(*r));
    }
    return out;
}

std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,m,scenario,queries,formula,oracle,winner\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',' << r.scenario << ',' << r.queries << ',';
        if (r.formula) os << *r.formula;
        os << ',';
        if (r.oracle) os << *r.oracle;
        os << ',' << to_string(r.winner) << '\n';
    }
    return os.str();
}

}  // namespace diaggames
