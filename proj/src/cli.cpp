#include "diaggames/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "diaggames/cantor.hpp"
#include "diaggames/engine.hpp"
#include "diaggames/kronecker.hpp"
#include "diaggames/oracle.hpp"

namespace diaggames::cli {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DIAG_GAMES_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw GameError(std::string("DIAG_GAMES_SEED is not an integer: '") + env + "'");
        }
    }
    return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw GameError("bad " + what + ": '" + s + "'");
    }
}

// "1,2" -> {0,1}; empty string -> {}
std::vector<int> parse_columns(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part, "column") - 1);
    return out;
}

// "1,2;1,2;3" -> per-row column lists
std::vector<std::vector<int>> parse_sets(const std::string& s) {
    std::vector<std::vector<int>> out;
    for (const auto& row : split(s, ';')) out.push_back(parse_columns(row));
    return out;
}

IntRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s, "range");
        return {v, v};
    }
    return {parse_int(s.substr(0, dots), "range"), parse_int(s.substr(dots + 2), "range")};
}

std::string pattern_string(std::uint32_t base, std::uint32_t free_mask, int n) {
    std::string s;
    for (int j = 0; j < n; ++j) {
        const auto bit = column_mask(j, n);
        s.push_back((free_mask & bit) ? '*' : ((base & bit) ? '1' : '0'));
    }
    return s;
}

// --- interactive players ---------------------------------------------------

class ManualCantor final : public CantorStrategy {
public:
    ManualCantor(GameParams params, std::istream& in, std::ostream& out) : matrix_(params), in_(in), out_(out) {
        out_ << "You are Cantor: " << params.m() << " hidden vectors of length " << params.n() << ".\n";
        if (params.regime() == Regime::large) {
            out_ << "Commands: 'I J' asks bit J of vector I; 'complete' claims every vector of {0,1}^n is\n"
                    "present; 'missing BITS' names one that is not; 'show' prints what you know.\n";
        } else {
            out_ << "Commands: 'I J' asks bit J of vector I; 'claim BITS' names a vector different from\n"
                    "all of them; 'show' prints what you know.\n";
        }
    }

    StrategyStep next_query() override {
        std::string line;
        while (true) {
            out_ << "cantor> " << std::flush;
            if (!std::getline(in_, line)) throw GameError("input ended before Cantor made a claim");
            std::istringstream words(line);
            std::string head;
            if (!(words >> head)) continue;
            try {
                const bool large = matrix_.params().regime() == Regime::large;
                if (head == "show") {
                    out_ << matrix_.to_string();
                } else if (head == "claim" && !large) {
                    std::string bits;
                    words >> bits;
                    auto u = BinaryVector::from_string(bits);
                    if (u.size() != matrix_.cols()) throw GameError("wrong vector length");
                    return Claim{SearchClaim{u}};
                } else if (head == "complete" && large) {
                    return Claim{DecisionClaim{true, std::nullopt}};
                } else if (head == "missing" && large) {
                    std::string bits;
                    words >> bits;
                    auto u = BinaryVector::from_string(bits);
                    if (u.size() != matrix_.cols()) throw GameError("wrong vector length");
                    return Claim{DecisionClaim{false, u}};
                } else {
                    int j = 0;
                    words >> j;
                    const Query q{parse_int(head, "row") - 1, j - 1};
                    matrix_.check_query(q);
                    if (matrix_.at(q) != Cell::unknown) throw GameError("already asked");
                    pending_ = q;
                    return q;
                }
            } catch (const GameError& e) {
                out_ << "  " << e.what() << "\n";
            }
        }
    }

    void observe(int answer) override {
        matrix_.set(pending_, answer);
        out_ << "  v" << pending_.row + 1 << "(" << pending_.col + 1 << ") = " << answer << "\n";
    }

private:
    PartialMatrix matrix_;
    std::istream& in_;
    std::ostream& out_;
    Query pending_;
};

class ManualKronecker final : public Adversary {
public:
    ManualKronecker(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    int answer(Query q) override {
        std::string line;
        while (true) {
            out_ << "kronecker> bit " << q.col + 1 << " of vector " << q.row + 1 << "? " << std::flush;
            if (!std::getline(in_, line)) throw GameError("input ended while Kronecker was answering");
            if (line == "0" || line == "1") return line[0] - '0';
            out_ << "  answer 0 or 1\n";
        }
    }

private:
    std::istream& in_;
    std::ostream& out_;
};

// --- play --------------------------------------------------------------------

struct PlayOptions {
    int n = 0;
    int m = 0;
    std::string cantor;
    std::string kronecker;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

std::unique_ptr<Adversary> make_adversary(const PlayOptions& o, const GameParams& p, std::uint64_t seed,
                                          bool& seeded, std::istream& in, std::ostream& out) {
    const auto& k = o.kronecker;
    if (k == "balanced") return std::make_unique<BalancedAdversary>(p.n());
    if (k == "covering") return std::make_unique<CoveringAdversary>();
    if (k == "zero-first") return std::make_unique<ZeroFirstAdversary>(p);
    if (k == "manual") return std::make_unique<ManualKronecker>(in, out);
    if (k == "random" || k.rfind("random:", 0) == 0) {
        seeded = true;
        const std::uint64_t s = k == "random" ? seed : std::stoull(k.substr(7));
        return std::make_unique<RandomAdversary>(s);
    }
    throw GameError("unknown --kronecker '" + k + "'");
}

int cmd_play(const PlayOptions& o, std::istream& in, std::ostream& out) {
    const GameParams p(o.m, o.n);
    const std::uint64_t seed = o.seed ? *o.seed : default_seed();
    bool seeded = false;
    auto kronecker = make_adversary(o, p, seed, seeded, in, out);

    Transcript t(p);
    std::optional<std::uint64_t> expected_queries;
    const auto& c = o.cantor;
    if (c == "diagonal") {
        DiagonalStrategy s(p);
        t = play_adaptive(s, *kronecker, p);
        expected_queries = static_cast<std::uint64_t>(p.m());
    } else if (c == "adaptive") {
        AdaptiveStrategy s(p);
        t = play_adaptive(s, *kronecker, p);
        expected_queries = static_cast<std::uint64_t>(2 * p.m() - p.n());
    } else if (c == "oblivious") {
        QueryPlan plan;
        if (p.regime() == Regime::small) {
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < p.m(); ++i) rows.push_back({i});
            plan = QueryPlan(p.n(), std::move(rows));
        } else {
            plan = oblivious_plan(p);
        }
        t = play_oblivious(plan, plan_output, *kronecker, p);
    } else if (c == "endgame") {
        t = play_oblivious(endgame_plan(p), plan_output, *kronecker, p);
    } else if (c == "exhaustive") {
        ExhaustiveDecisionStrategy s(p);
        t = play_adaptive(s, *kronecker, p);
        expected_queries = static_cast<std::uint64_t>(p.m()) * static_cast<std::uint64_t>(p.n());
    } else if (c == "manual") {
        ManualCantor s(p, in, out);
        t = play_adaptive(s, *kronecker, p);
    } else {
        throw GameError("unknown --cantor '" + c + "'");
    }
    if (seeded) t.seed = seed;

    const Winner w = judge(t);
    out << "n=" << p.n() << " m=" << p.m() << " regime=" << to_string(p.regime()) << " queries=" << t.events.size()
        << " winner=" << to_string(w) << "\n";
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw GameError("cannot write '" + o.out_path + "'");
        f << to_json(t) << "\n";
    }
    if (c == "manual") return kExpected;
    if (w != Winner::cantor) return kUnexpected;
    if (expected_queries && t.events.size() != *expected_queries) return kUnexpected;
    return kExpected;
}

// --- oracle ------------------------------------------------------------------

struct OracleOptions {
    std::string which;
    int n = 0;
    int m = 0;
    std::string plan;
    std::string dirs;
    std::string sets;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
    if (o.which == "g") {
        out << adaptive_game_value(GameParams(o.m, o.n)) << "\n";
    } else if (o.which == "f") {
        out << oblivious_game_value(GameParams(o.m, o.n)) << "\n";
    } else if (o.which == "covering") {
        const QueryPlan plan(o.n, parse_sets(o.plan));
        const auto a = covering_exists(plan);
        if (!a) {
            out << "none (Cantor wins with this plan)\n";
        } else {
            out << "covering assignment:\n";
            for (int i = 0; i < a->rows(); ++i) {
                out << "  f" << i + 1 << ":";
                const auto& cols = a->columns[static_cast<std::size_t>(i)];
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    out << " " << cols[k] + 1 << "=" << a->values[static_cast<std::size_t>(i)][k];
                }
                out << "\n";
            }
        }
    } else if (o.which == "edge-matching") {
        const auto dirs = parse_columns(o.dirs);
        const auto match = edge_matching(dirs, o.n);
        if (!match) {
            std::map<int, int> mult;
            for (int j : dirs) ++mult[j];
            const bool odd = std::any_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second % 2 != 0; });
            const bool perfect = dirs.size() == (std::size_t{1} << (o.n - 1));
            out << (perfect && odd ? "none (parity)" : "none") << "\n";
        } else {
            for (std::size_t k = 0; k < match->size(); ++k) {
                const auto& e = (*match)[k];
                out << (k ? " " : "") << BinaryVector(e.low, o.n).to_string() << "-"
                    << BinaryVector(e.high(o.n), o.n).to_string();
            }
            out << "\n";
        }
    } else if (o.which == "cube-cover") {
        const auto sets = parse_sets(o.sets);
        const auto cover = cube_cover_search(sets, o.n);
        if (!cover) {
            out << "NONE: no placement reaches d+q; this instance contradicts the cube-cover conjecture\n";
        } else {
            out << "union=" << cover->union_size << " cubes:";
            for (const auto& c : cover->cubes) out << " " << pattern_string(c.base, c.free_mask, o.n);
            out << "\n";
        }
    } else {
        throw GameError("unknown --which '" + o.which + "'");
    }
    return kExpected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cantor-Kronecker diagonalization games"};
    app.require_subcommand(1);

    PlayOptions play;
    std::uint64_t seed_flag = 0;
    auto* play_cmd = app.add_subcommand("play", "play one game and judge it");
    play_cmd->add_option("--n", play.n, "vector length")->required();
    play_cmd->add_option("--m", play.m, "number of vectors")->required();
    play_cmd->add_option("--cantor", play.cantor, "diagonal|adaptive|oblivious|endgame|exhaustive|manual")->required();
    play_cmd->add_option("--kronecker", play.kronecker, "balanced|covering|zero-first|manual|random[:SEED]")
        ->required();
    play_cmd->add_option("--out", play.out_path, "transcript output path");
    auto* seed_opt = play_cmd->add_option("--seed", seed_flag, "seed (default: $DIAG_GAMES_SEED or 0)");

    std::string scenario;
    std::string n_range;
    std::string m_range;
    int jobs = 1;
    auto* table_cmd = app.add_subcommand("table", "CSV of one game per (n, m) cell");
    table_cmd->add_option("--scenario", scenario, "diagonal|adaptive|oblivious|oblivious-tiny|endgame|zero_first")
        ->required();
    table_cmd->add_option("--n-range", n_range, "A..B or A")->required();
    table_cmd->add_option("--m-range", m_range, "A..B or A")->required();
    table_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth on tiny instances");
    oracle_cmd->add_option("--which", oracle.which, "g|f|covering|edge-matching|cube-cover")->required();
    oracle_cmd->add_option("--n", oracle.n, "vector length")->required();
    oracle_cmd->add_option("--m", oracle.m, "number of vectors");
    oracle_cmd->add_option("--plan", oracle.plan, "per-row columns, e.g. '1,2;1,2;3'");
    oracle_cmd->add_option("--dirs", oracle.dirs, "edge directions, e.g. '1,1,2'");
    oracle_cmd->add_option("--sets", oracle.sets, "cube column sets, e.g. '1,2;3'");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExpected;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (play_cmd->parsed()) {
            if (seed_opt->count() > 0) play.seed = seed_flag;
            return cmd_play(play, in, out);
        }
        if (table_cmd->parsed()) {
            out << to_csv(run_table(scenario, parse_range(n_range), parse_range(m_range), jobs));
            return kExpected;
        }
        return cmd_oracle(oracle, out);
    } catch (const BudgetExceeded& e) {
        err << "over budget: " << e.what() << "\n";
        return kBudget;
    } catch (const GameError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace diaggames::cli
