// Thin pybind11 layer. Structured values cross the boundary as JSON text;
// the hlab package decodes them into Python objects.

#include "cli.hpp"

#include "hlab/codec.hpp"
#include "hlab/errors.hpp"
#include "hlab/extremal.hpp"
#include "hlab/family.hpp"
#include "hlab/measure.hpp"
#include "hlab/named.hpp"
#include "hlab/predicate.hpp"
#include "hlab/steiner.hpp"
#include "hlab/subset.hpp"
#include "hlab/supersat.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

namespace py = pybind11;
using nlohmann::json;

namespace {

auto options(int workers, unsigned exact_cap) -> hlab::MeasureOptions
{
    hlab::MeasureOptions o;
    o.workers = workers;
    if (exact_cap > 0)
        o.exact_cap_bits = exact_cap;
    return o;
}

// Builtin names ("K3", "C4", ...) first, then graph6 or JSON text.
auto graph(const std::string& text) -> hlab::RUniformGraph
{
    try {
        return hlab::named_graph(text);
    } catch (const hlab::ParseError&) {
    }
    return hlab::parse_graph(text);
}

auto family(const std::string& text) -> hlab::ForbiddenFamily
{
    return hlab::family_from_json(json::parse(text));
}

auto predicate(const std::string& text) -> hlab::EdgePredicate
{
    return hlab::predicate_from_json(json::parse(text));
}

auto subsets(const std::string& text) -> std::vector<hlab::Subset>
{
    return json::parse(text).get<std::vector<hlab::Subset>>();
}

auto optional_rational(const std::optional<std::string>& s) -> std::optional<hlab::Rational>
{
    if (!s)
        return std::nullopt;
    return hlab::parse_rational(*s);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "hlab native core";

    auto base = py::register_exception<hlab::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<hlab::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<hlab::ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<hlab::FeasibilityError>(m, "FeasibilityError", base.ptr());
    py::register_exception<hlab::SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<hlab::MalformedSubsetError>(m, "MalformedSubsetError", base.ptr());
    py::register_exception<hlab::DegenerateSubsetError>(m, "DegenerateSubsetError", base.ptr());
    py::register_exception<hlab::ConstructionError>(m, "ConstructionError", base.ptr());
    py::register_exception<hlab::OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<json::exception>(m, "JsonError", PyExc_ValueError);

    m.def("rank_subset", [](const hlab::Subset& s, int r) { return hlab::rank_subset(s, r); });
    m.def("unrank_subset", &hlab::unrank_subset);

    m.def("parse_graph", [](const std::string& text) { return hlab::graph_to_json(graph(text)).dump(); });
    m.def("to_graph6", [](const std::string& text) { return hlab::to_graph6(graph(text)); });
    m.def("count_induced", [](const std::string& g, const std::string& fam) {
        return hlab::count_induced(graph(g), family(fam));
    });
    m.def("contains_induced", [](const std::string& g, const std::string& fam) {
        return hlab::contains_induced(graph(g), family(fam));
    });

    m.def(
        "exact_measure",
        [](int n, int r, const std::string& p, const std::string& pred, int workers, unsigned cap) {
            return hlab::to_json(hlab::exact_measure(n, r, hlab::parse_rational(p), predicate(pred), options(workers, cap)))
                .dump();
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("predicate"), py::arg("workers") = 1, py::arg("exact_cap") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "mc_measure",
        [](int n, int r, const std::string& p, const std::string& pred, std::uint64_t samples, std::uint64_t seed,
           double ci, int workers) {
            return hlab::to_json(hlab::mc_measure(n, r, hlab::parse_rational(p), predicate(pred), samples, seed, ci, workers))
                .dump();
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("predicate"), py::arg("samples"), py::arg("seed"),
        py::arg("ci") = 0.95, py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "cn_sequence",
        [](const std::string& fam, const std::string& p, const std::vector<int>& ns, int workers, unsigned cap) {
            json out = json::array();
            for (const auto& pt : hlab::cn_sequence(family(fam), hlab::parse_rational(p), ns, options(workers, cap)))
                out.push_back(hlab::to_json(pt));
            return out.dump();
        },
        py::arg("family"), py::arg("p"), py::arg("ns"), py::arg("workers") = 1, py::arg("exact_cap") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "greedy_system",
        [](int r, int mm, int n, std::uint64_t seed) {
            return hlab::system_to_json(hlab::greedy_system(r, mm, n, seed)).dump();
        },
        py::arg("r"), py::arg("m"), py::arg("n"), py::arg("seed"));
    m.def(
        "nibble_system",
        [](int r, int mm, int n, std::uint64_t seed, double bite, int rounds) {
            hlab::NibbleOptions o;
            o.bite = bite;
            o.rounds = rounds;
            return hlab::system_to_json(hlab::nibble_system(r, mm, n, seed, o)).dump();
        },
        py::arg("r"), py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("bite") = 0.1, py::arg("rounds") = 10);
    m.def(
        "best_greedy",
        [](int r, int mm, int n, std::uint64_t restarts, std::uint64_t seed, int workers) {
            return hlab::to_json(hlab::best_greedy(r, mm, n, restarts, seed, workers)).dump();
        },
        py::arg("r"), py::arg("m"), py::arg("n"), py::arg("restarts"), py::arg("seed"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("verify_system", [](const std::string& sys) {
        return hlab::to_json(hlab::verify_system(hlab::system_from_json(json::parse(sys)))).dump();
    });
    m.def("check_maximal", [](const std::string& sys) {
        return hlab::to_json(hlab::check_maximal(hlab::system_from_json(json::parse(sys)))).dump();
    });

    m.def(
        "lemma_report",
        [](const std::string& pred, const std::string& sys, const std::string& fam, const std::string& p,
           const std::string& nu, const std::optional<std::string>& gamma, const std::optional<std::string>& lambda,
           int workers) {
            hlab::LemmaParameters params;
            params.nu = hlab::parse_rational(nu);
            params.gamma = optional_rational(gamma);
            params.lambda = optional_rational(lambda);
            return hlab::to_json(hlab::lemma_report(predicate(pred), hlab::system_from_json(json::parse(sys)),
                                                    family(fam), params, hlab::parse_rational(p),
                                                    options(workers, 0)))
                .dump();
        },
        py::arg("predicate"), py::arg("system"), py::arg("family"), py::arg("p"), py::arg("nu"),
        py::arg("gamma") = std::nullopt, py::arg("lambda_") = std::nullopt, py::arg("workers") = 1);
    m.def(
        "partition_table",
        [](const std::string& pred, const std::string& sys, const std::string& fam, const std::string& p, int workers) {
            return hlab::to_json(hlab::partition_table(predicate(pred), hlab::system_from_json(json::parse(sys)),
                                                       family(fam), hlab::parse_rational(p), options(workers, 0)))
                .dump();
        },
        py::arg("predicate"), py::arg("system"), py::arg("family"), py::arg("p"), py::arg("workers") = 1);
    m.def("tail_mass", [](const std::string& nu, std::uint64_t d, const std::string& mu) {
        return hlab::to_string(hlab::tail_mass(hlab::parse_rational(nu), d, hlab::parse_rational(mu)));
    });
    m.def(
        "x_set",
        [](const std::string& pred, const std::string& fam, int mm, const std::string& gamma, int n,
           const std::string& p, int workers) {
            return hlab::to_json(hlab::x_set(predicate(pred), family(fam), mm, hlab::parse_rational(gamma), n,
                                             hlab::parse_rational(p), options(workers, 0)))
                .dump();
        },
        py::arg("predicate"), py::arg("family"), py::arg("m"), py::arg("gamma"), py::arg("n"), py::arg("p"),
        py::arg("workers") = 1);
    m.def("counting_floor", [](int n, int mm, int t, const std::string& gamma, const std::string& eta) {
        return hlab::to_json(hlab::counting_floor(n, mm, t, hlab::parse_rational(gamma), hlab::parse_rational(eta))).dump();
    });

    m.def("tau", [](const std::string& g) { return hlab::to_json(hlab::tau(graph(g))).dump(); });
    m.def("predicted_c_half",
          [](const std::string& g) { return hlab::to_string(hlab::predicted_c_half(graph(g))); });
    m.def(
        "exstar",
        [](int n, const std::string& g, int workers) {
            return hlab::to_json(hlab::exstar(n, graph(g), workers)).dump();
        },
        py::arg("n"), py::arg("graph"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("witness_check", [](int n, const std::string& g, const std::string& e, const std::string& e0) {
        return hlab::to_json(hlab::witness_check(n, graph(g), subsets(e), subsets(e0))).dump();
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = hlab::cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
    });
}
