#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diaggames/cantor.hpp"
#include "diaggames/engine.hpp"
#include "diaggames/kronecker.hpp"
#include "diaggames/matching.hpp"
#include "diaggames/oracle.hpp"

namespace py = pybind11;
using namespace diaggames;

namespace {

// Python sees 1-based rows and columns, like the transcripts and the CLI.
py::list events_list(const Transcript& t) {
    py::list out;
    for (const auto& e : t.events) out.append(py::make_tuple(e.query.row + 1, e.query.col + 1, e.answer));
    return out;
}

std::vector<std::vector<int>> zero_based(const std::vector<std::vector<int>>& sets) {
    auto out = sets;
    for (auto& s : out) {
        for (auto& c : s) --c;
    }
    return out;
}

std::vector<std::vector<int>> one_based(const std::vector<std::vector<int>>& sets) {
    auto out = sets;
    for (auto& s : out) {
        for (auto& c : s) ++c;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_diaggames, m) {
    m.doc() = "Cantor-Kronecker diagonalization games: strategies, adversaries, judges and oracles.";

    py::register_exception<GameError>(m, "GameError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::enum_<Regime>(m, "Regime").value("small", Regime::small).value("mid", Regime::mid).value("large", Regime::large);
    py::enum_<Winner>(m, "Winner").value("cantor", Winner::cantor).value("kronecker", Winner::kronecker);

    py::class_<GameParams>(m, "GameParams")
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def_property_readonly("m", &GameParams::m)
        .def_property_readonly("n", &GameParams::n)
        .def_property_readonly("regime", &GameParams::regime)
        .def("__repr__", [](const GameParams& p) {
            return "GameParams(m=" + std::to_string(p.m()) + ", n=" + std::to_string(p.n()) + ")";
        });

    py::class_<BinaryVector>(m, "BinaryVector")
        .def(py::init(&BinaryVector::from_string), py::arg("bits"))
        .def_property_readonly("code", &BinaryVector::code)
        .def("bits", &BinaryVector::bits)
        .def("__str__", &BinaryVector::to_string)
        .def("__repr__", [](const BinaryVector& v) { return "BinaryVector('" + v.to_string() + "')"; })
        .def("__eq__", [](const BinaryVector& a, const BinaryVector& b) { return a == b; });

    py::class_<PartialMatrix>(m, "PartialMatrix")
        .def(py::init<GameParams>(), py::arg("params"))
        .def_property_readonly("rows", &PartialMatrix::rows)
        .def_property_readonly("cols", &PartialMatrix::cols)
        .def(
            "set",
            [](PartialMatrix& L, int i, int j, int b) { L.set({i - 1, j - 1}, b); },
            py::arg("row"), py::arg("col"), py::arg("bit"))
        .def(
            "get",
            [](const PartialMatrix& L, int i, int j) -> py::object {
                L.check_query({i - 1, j - 1});
                const Cell c = L.at(i - 1, j - 1);
                if (c == Cell::unknown) return py::none();
                return py::int_(static_cast<int>(c));
            },
            py::arg("row"), py::arg("col"))
        .def("fixed_rows",
             [](const PartialMatrix& L) {
                 std::vector<std::string> out;
                 for (auto v : fixed_rows(L)) out.push_back(BinaryVector(v, L.cols()).to_string());
                 return out;
             })
        .def("is_complete", [](const PartialMatrix& L) { return is_complete(L); })
        .def("__str__", &PartialMatrix::to_string);

    py::class_<QueryPlan>(m, "QueryPlan")
        .def(py::init([](int n, const std::vector<std::vector<int>>& rows) { return QueryPlan(n, zero_based(rows)); }),
             py::arg("n"), py::arg("rows"))
        .def_property_readonly("rows", [](const QueryPlan& p) { return one_based(p.per_row()); })
        .def_property_readonly("n", &QueryPlan::cols)
        .def("total_size", &QueryPlan::total_size);

    py::class_<Transcript>(m, "Transcript")
        .def_property_readonly("params", [](const Transcript& t) { return t.params; })
        .def_property_readonly("events", &events_list)
        .def_property_readonly("claim",
                               [](const Transcript& t) -> py::object {
                                   if (!t.claim) return py::none();
                                   if (const auto* s = std::get_if<SearchClaim>(&*t.claim)) {
                                       return py::dict(py::arg("kind") = "search", py::arg("u") = s->u.to_string());
                                   }
                                   const auto& d = std::get<DecisionClaim>(*t.claim);
                                   py::object witness = py::none();
                                   if (d.witness) witness = py::str(d.witness->to_string());
                                   return py::dict(py::arg("kind") = "decision", py::arg("complete") = d.complete,
                                                   py::arg("witness") = witness);
                               })
        .def_property_readonly("seed", [](const Transcript& t) { return t.seed; })
        .def("replay", &Transcript::replay)
        .def("to_json", [](const Transcript& t, int indent) { return to_json(t, indent); }, py::arg("indent") = 2)
        .def_static("from_json", &transcript_from_json, py::arg("text"))
        .def("__len__", [](const Transcript& t) { return t.events.size(); });

    py::class_<CantorStrategy>(m, "CantorStrategy");
    py::class_<DiagonalStrategy, CantorStrategy>(m, "DiagonalStrategy").def(py::init<GameParams>(), py::arg("params"));
    py::class_<AdaptiveStrategy, CantorStrategy>(m, "AdaptiveStrategy").def(py::init<GameParams>(), py::arg("params"));
    py::class_<ExhaustiveDecisionStrategy, CantorStrategy>(m, "ExhaustiveDecisionStrategy")
        .def(py::init<GameParams>(), py::arg("params"));
    py::class_<RandomLegalStrategy, CantorStrategy>(m, "RandomLegalStrategy")
        .def(py::init<GameParams, std::uint64_t>(), py::arg("params"), py::arg("seed"));

    py::class_<Adversary>(m, "Adversary").def("answer", [](Adversary& a, int i, int j) {
        return a.answer({i - 1, j - 1});
    });
    py::class_<BalancedAdversary, Adversary>(m, "BalancedAdversary").def(py::init<int>(), py::arg("n"));
    py::class_<RandomAdversary, Adversary>(m, "RandomAdversary").def(py::init<std::uint64_t>(), py::arg("seed"));
    py::class_<ConstantAdversary, Adversary>(m, "ConstantAdversary").def(py::init<int>(), py::arg("bit"));
    py::class_<CoveringAdversary, Adversary>(m, "CoveringAdversary").def(py::init<>());
    py::class_<ZeroFirstAdversary, Adversary>(m, "ZeroFirstAdversary")
        .def(py::init<const GameParams&>(), py::arg("params"))
        .def_property_readonly("matrix", &ZeroFirstAdversary::matrix);

    m.def("play_adaptive", &play_adaptive, py::arg("cantor"), py::arg("adversary"), py::arg("params"));
    m.def(
        "play_oblivious",
        [](const QueryPlan& plan, Adversary& adversary, const GameParams& params) {
            return play_oblivious(plan, plan_output, adversary, params);
        },
        py::arg("plan"), py::arg("adversary"), py::arg("params"),
        "Plays a plan; the claim is the block rule for block plans, otherwise the first provably missing vector.");
    m.def("judge", &judge, py::arg("transcript"));

    m.def("choose_x", &choose_x, py::arg("m_alive"), py::arg("n_left"));
    m.def("oblivious_block_d", &oblivious_block_d, py::arg("params"));
    m.def("oblivious_plan", &oblivious_plan, py::arg("params"));
    m.def("endgame_plan", &endgame_plan, py::arg("params"));

    m.def(
        "greedy_covering",
        [](const QueryPlan& plan) -> py::object {
            const auto f = greedy_covering(plan);
            if (!f) return py::none();
            return py::cast(f->values);
        },
        py::arg("plan"), "Per-row values on the planned columns, or None.");
    m.def(
        "covering_exists",
        [](const QueryPlan& plan) -> py::object {
            const auto f = covering_exists(plan);
            if (!f) return py::none();
            return py::cast(f->values);
        },
        py::arg("plan"), "Per-row values on the planned columns, or None.");
    m.def(
        "is_unblocked", [](const PartialMatrix& L) { return is_unblocked(L).has_value(); }, py::arg("matrix"));

    m.def("adaptive_game_value", &adaptive_game_value, py::arg("params"));
    m.def("oblivious_game_value", &oblivious_game_value, py::arg("params"));
    m.def(
        "edge_matching",
        [](const std::vector<int>& dirs, int n) -> py::object {
            std::vector<int> zero(dirs);
            for (auto& d : zero) --d;
            const auto match = edge_matching(zero, n);
            if (!match) return py::none();
            py::list out;
            for (const auto& e : *match) {
                out.append(py::make_tuple(BinaryVector(e.low, n).to_string(), BinaryVector(e.high(n), n).to_string()));
            }
            return out;
        },
        py::arg("dirs"), py::arg("n"));
    m.def(
        "cube_cover_search",
        [](const std::vector<std::vector<int>>& sets, int n) -> py::object {
            const auto cover = cube_cover_search(zero_based(sets), n);
            if (!cover) return py::none();
            return py::int_(cover->union_size);
        },
        py::arg("sets"), py::arg("n"), "Size of the best union found, or None.");

    m.def(
        "table",
        [](const std::string& scenario, std::pair<int, int> n_range, std::pair<int, int> m_range, int jobs) {
            return to_csv(run_table(scenario, {n_range.first, n_range.second}, {m_range.first, m_range.second}, jobs));
        },
        py::arg("scenario"), py::arg("n_range"), py::arg("m_range"), py::arg("jobs") = 1);
}
