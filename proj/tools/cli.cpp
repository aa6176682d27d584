#include "cli.hpp"

#include "hlab/binomial.hpp"
#include "hlab/codec.hpp"
#include "hlab/errors.hpp"
#include "hlab/extremal.hpp"
#include "hlab/family.hpp"
#include "hlab/measure.hpp"
#include "hlab/named.hpp"
#include "hlab/parallel.hpp"
#include "hlab/predicate.hpp"
#include "hlab/rational.hpp"
#include "hlab/steiner.hpp"
#include "hlab/supersat.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace hlab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto read_file_if_exists(const std::string& arg) -> std::optional<std::string>
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec))
        return std::nullopt;
    std::ifstream in(arg, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + arg);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// A file path, a builtin name ("K3", "C4", ...) or literal graph6/JSON.
auto load_graph(const std::string& arg) -> RUniformGraph
{
    if (auto text = read_file_if_exists(arg))
        return parse_graph(*text);
    try {
        return named_graph(arg);
    } catch (const ParseError&) {
    }
    return parse_graph(arg);
}

/// A file, a JSON family literal, or a comma-separated list of graph args.
auto load_family(const std::string& arg) -> ForbiddenFamily
{
    if (auto text = read_file_if_exists(arg))
        return normalize_family(parse_graph_list(*text));
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{'))
        return normalize_family(parse_graph_list(arg));
    std::vector<RUniformGraph> members;
    std::stringstream parts(arg);
    for (std::string item; std::getline(parts, item, ',');)
        members.push_back(load_graph(item));
    return normalize_family(std::move(members));
}

auto load_json(const std::string& arg) -> nlohmann::json
{
    const auto text = read_file_if_exists(arg).value_or(arg);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? std::nullopt : std::optional(e.byte - 1));
    }
}

auto probability(const std::string& text) -> Rational
{
    auto p = parse_rational(text);
    if (p < 0 || p > 1)
        throw ParameterError("p must lie in [0, 1]");
    return p;
}

auto json_rational(const nlohmann::json& j, const char* key) -> Rational
{
    if (!j.is_string())
        throw ParseError(std::string("\"") + key + "\" must be a rational string such as \"1/2\"");
    return parse_rational(j.get<std::string>());
}

auto optional_rational(const nlohmann::json& obj, const char* key) -> std::optional<Rational>
{
    if (!obj.contains(key) || obj[key].is_null())
        return std::nullopt;
    return json_rational(obj[key], key);
}

struct PredicateFlags {
    std::vector<std::string> forb;
    std::vector<std::string> contains;
    std::optional<std::uint64_t> min_edges;
    std::optional<std::uint64_t> max_edges;
    std::optional<std::string> predicate;

    void bind(CLI::App* cmd)
    {
        cmd->add_option("--forb", forb, "forbid induced members of this family (file, name list or literal)");
        cmd->add_option("--contains", contains, "require an induced member of this family");
        cmd->add_option("--min-edges", min_edges, "at least k edges");
        cmd->add_option("--max-edges", max_edges, "at most k edges");
        cmd->add_option("--predicate", predicate, "predicate JSON (file or literal)");
    }

    auto given() const -> bool
    {
        return !forb.empty() || !contains.empty() || min_edges || max_edges || predicate;
    }

    auto build() const -> EdgePredicate
    {
        std::vector<EdgePredicate> parts;
        for (const auto& f : forb)
            parts.push_back(EdgePredicate::forb(load_family(f)));
        for (const auto& f : contains)
            parts.push_back(EdgePredicate::contains(load_family(f)));
        if (min_edges)
            parts.push_back(EdgePredicate::min_edges(*min_edges));
        if (max_edges)
            parts.push_back(EdgePredicate::max_edges(*max_edges));
        if (predicate)
            parts.push_back(predicate_from_json(load_json(*predicate)));
        if (parts.empty())
            return EdgePredicate::always_true();
        if (parts.size() == 1)
            return std::move(parts.front());
        return EdgePredicate::intersection(std::move(parts));
    }
};

/// r defaults to the uniformity the predicate implies, else 2.
auto resolve_r(std::optional<int> flag, const EdgePredicate& pred) -> int
{
    if (flag)
        return *flag;
    const int implied = pred.implied_uniformity();
    return implied == 0 ? 2 : implied;
}

struct Instance {
    int n = 0;
    int r = 2;
    Rational p;
    EdgePredicate a = EdgePredicate::always_true();
    std::optional<ForbiddenFamily> family;
    std::optional<SteinerSystem> system;
    LemmaParameters params;
    bool has_nu = false;
    std::optional<int> m;
};

auto load_instance(const std::string& arg) -> Instance
{
    const auto j = load_json(arg);
    if (!j.is_object())
        throw ParseError("instance JSON must be an object");
    Instance inst;
    try {
        if (!j.contains("n") || !j.contains("p"))
            throw ParseError("instance needs \"n\" and \"p\"");
        inst.n = j["n"].get<int>();
        inst.r = j.value("r", 2);
        inst.p = json_rational(j["p"], "p");
        if (inst.p < 0 || inst.p > 1)
            throw ParameterError("p must lie in [0, 1]");
        if (j.contains("predicate"))
            inst.a = predicate_from_json(j["predicate"]);
        if (j.contains("family"))
            inst.family = family_from_json(j["family"]);
        if (j.contains("system"))
            inst.system = system_from_json(j["system"]);
        if (j.contains("params")) {
            const auto& params = j["params"];
            if (auto nu = optional_rational(params, "nu")) {
                inst.params.nu = *nu;
                inst.has_nu = true;
            }
            inst.params.gamma = optional_rational(params, "gamma");
            inst.params.epsilon = optional_rational(params, "epsilon");
            inst.params.epsilon_prime = optional_rational(params, "epsilon_prime");
            inst.params.lambda = optional_rational(params, "lambda");
            if (params.contains("m"))
                inst.m = params["m"].get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("instance JSON has fields of the wrong type: ") + e.what());
    }
    return inst;
}

auto require_family(const Instance& inst) -> const ForbiddenFamily&
{
    if (!inst.family)
        throw ParseError("instance needs a \"family\"");
    return *inst.family;
}

auto require_system(const Instance& inst) -> const SteinerSystem&
{
    if (!inst.system)
        throw ParseError("instance needs a \"system\"");
    return *inst.system;
}

auto edge_list(const std::string& arg) -> std::vector<Subset>
{
    const auto j = load_json(arg);
    try {
        return j.get<std::vector<Subset>>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("edge list must be a JSON array of vertex pairs");
    }
}

auto parse_ns(const std::string& text) -> std::vector<int>
{
    std::vector<int> ns;
    std::stringstream parts(text);
    for (std::string item; std::getline(parts, item, ',');) {
        const auto dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                ns.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dash));
                const int hi = std::stoi(item.substr(dash + 1));
                for (int n = lo; n <= hi; ++n)
                    ns.push_back(n);
            }
        } catch (const std::logic_error&) {
            throw UsageError("--ns expects a list such as 2-7 or 3,5,6");
        }
    }
    if (ns.empty())
        throw UsageError("--ns is empty");
    return ns;
}

auto quote_csv(const std::string& cell) -> std::string
{
    if (cell.find_first_of(",\"\n\r") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

auto exact_cap_from_env() -> std::optional<unsigned>
{
    const char* env = std::getenv("HLAB_EXACT_CAP");
    if (env == nullptr || *env == '\0')
        return std::nullopt;
    char* end = nullptr;
    const auto value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value > 64)
        throw UsageError("HLAB_EXACT_CAP must be an integer bit count");
    return static_cast<unsigned>(value);
}

struct SteinerRun {
    SteinerSystem system;
    std::uint64_t seed = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;
};

/// Best nibble system over seeds seed..seed+restarts-1, lowest seed on ties.
auto best_nibble(int r, int m, int n, std::uint64_t restarts, std::uint64_t seed, const NibbleOptions& options,
                 int workers) -> SteinerRun
{
    constexpr std::uint64_t kBatch = 64;
    const auto chunks = static_cast<std::size_t>((restarts + kBatch - 1) / kBatch);
    auto partial = map_chunks<SteinerRun>(chunks, workers, [&](std::size_t c) {
        SteinerRun best;
        bool first = true;
        const auto begin = c * kBatch;
        const auto end = std::min<std::uint64_t>(restarts, begin + kBatch);
        for (auto i = begin; i < end; ++i) {
            auto sys = nibble_system(r, m, n, seed + i, options);
            ++best.histogram[sys.d()];
            if (first || sys.d() > best.system.d()) {
                best.system = std::move(sys);
                best.seed = seed + i;
                first = false;
            }
        }
        return best;
    });
    SteinerRun out;
    bool first = true;
    for (auto& p : partial) {
        for (const auto& [d, count] : p.histogram)
            out.histogram[d] += count;
        if (first || p.system.d() > out.system.d()) {
            out.system = std::move(p.system);
            out.seed = p.seed;
            first = false;
        }
    }
    return out;
}

auto histogram_json(const std::map<std::uint64_t, std::uint64_t>& histogram) -> nlohmann::json
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [d, count] : histogram)
        out[std::to_string(d)] = count;
    return out;
}

} // namespace

auto csv_cell(const nlohmann::json& value) -> std::string
{
    if (value.is_null())
        return "";
    if (value.is_string())
        return value.get<std::string>();
    return value.dump();
}

auto render_csv(const nlohmann::json& result) -> std::string
{
    std::vector<nlohmann::json> rows;
    if (result.is_object()) {
        rows.push_back(result);
    } else if (result.is_array() && !result.empty() &&
               std::all_of(result.begin(), result.end(), [](const auto& e) { return e.is_object(); })) {
        rows.assign(result.begin(), result.end());
    } else {
        rows.push_back({{"value", result}});
    }
    std::set<std::string> keys;
    for (const auto& row : rows)
        for (const auto& item : row.items())
            keys.insert(item.key());
    std::ostringstream out;
    bool first = true;
    for (const auto& k : keys) {
        out << (first ? "" : ",") << quote_csv(k);
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& k : keys) {
            out << (first ? "" : ",") << quote_csv(row.contains(k) ? csv_cell(row[k]) : "");
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Exact and sampled checks for hereditary graph properties", "hlab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    int workers = 1;
    std::optional<unsigned> exact_cap;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--exact-cap", exact_cap, "largest C(n,r) enumerated exactly (bits)")
        ->check(CLI::Range(0U, kHardExactCap));

    // Shared option storage; only one subcommand is parsed per run.
    int n = 0;
    int m = 0;
    int t = 0;
    std::optional<int> r;
    std::string p;
    std::optional<std::uint64_t> seed;
    std::uint64_t samples = 10000;
    double ci = 0.95;
    std::string graph;
    std::string family;
    std::string instance;
    std::string system;
    std::string nu;
    std::string gamma;
    std::string eta;
    std::string mu;
    std::optional<std::string> lambda;
    std::uint64_t d = 0;
    std::uint64_t restarts = 1;
    std::string algo = "greedy";
    NibbleOptions nibble;
    std::string ns = "2-7";
    std::string e_arg;
    std::string e0_arg = "[]";
    std::string codec_to = "both";
    bool exact_flag = false;
    PredicateFlags pred;

    auto* measure = app.add_subcommand("measure", "exact measure of a graph class");
    measure->add_option("--n", n, "vertices")->required();
    measure->add_option("--r", r, "uniformity");
    measure->add_option("--p", p, "edge probability as a rational")->required();
    measure->add_flag("--exact", exact_flag, "exhaustive enumeration (the only mode)");
    pred.bind(measure);

    auto* cn = app.add_subcommand("cn", "entropy constants c_n of Forb(F)");
    cn->add_option("--forb", family, "forbidden family")->required();
    cn->add_option("--p", p)->required();
    cn->add_option("--ns", ns, "orders, e.g. 2-7 or 3,5");

    auto* mc = app.add_subcommand("mc", "Monte-Carlo measure with a Clopper-Pearson interval");
    mc->add_option("--n", n)->required();
    mc->add_option("--r", r);
    mc->add_option("--p", p)->required();
    mc->add_option("--samples", samples)->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed)->required();
    mc->add_option("--ci", ci, "confidence level")->check(CLI::Range(0.0, 1.0));
    pred.bind(mc);

    auto* steiner = app.add_subcommand("steiner", "construct a partial Steiner system");
    steiner->add_option("--r", r)->required();
    steiner->add_option("--m", m)->required();
    steiner->add_option("--n", n)->required();
    steiner->add_option("--algo", algo)->check(CLI::IsMember({"greedy", "nibble"}));
    steiner->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
    steiner->add_option("--seed", seed)->required();
    steiner->add_option("--bite", nibble.bite)->check(CLI::Range(0.0, 1.0));
    steiner->add_option("--rounds", nibble.rounds)->check(CLI::NonNegativeNumber);
    steiner->add_option("--lambda", lambda, "demanded uncovered fraction");

    auto* verify = app.add_subcommand("verify-steiner", "check a block family");
    verify->add_option("--system", system)->required();
    verify->add_option("--lambda", lambda);
    verify->add_option("--seed", seed, "seed for sampled maximality checks");

    auto* lemma = app.add_subcommand("lemma", "block-averaging report for an instance");
    lemma->add_option("--instance", instance)->required();
    lemma->add_option("--nu", nu);
    lemma->add_option("--gamma", gamma);
    lemma->add_option("--lambda", lambda);

    auto* partition = app.add_subcommand("partition", "cell table, projection bound and tail domination");
    partition->add_option("--instance", instance)->required();
    partition->add_option("--nu", nu);

    auto* tail = app.add_subcommand("tailmass", "sum_{i <= nu d} C(d,i) mu^(d-i)");
    tail->add_option("--nu", nu)->required();
    tail->add_option("--d", d)->required();
    tail->add_option("--mu", mu)->required();

    auto* xset = app.add_subcommand("xset", "m-sets where F appears often inside A");
    xset->add_option("--instance", instance);
    xset->add_option("--n", n);
    xset->add_option("--m", m);
    xset->add_option("--p", p);
    xset->add_option("--gamma", gamma);
    xset->add_option("--family", family, "pattern family F");
    pred.bind(xset);

    auto* floor_cmd = app.add_subcommand("floor", "counting floor gamma eta (2m)^-t n^t");
    floor_cmd->add_option("--n", n)->required();
    floor_cmd->add_option("--m", m)->required();
    floor_cmd->add_option("--t", t)->required();
    floor_cmd->add_option("--gamma", gamma)->required();
    floor_cmd->add_option("--eta", eta)->required();

    auto* tau_cmd = app.add_subcommand("tau", "clique/independent partition parameter");
    tau_cmd->add_option("--graph", graph)->required();

    auto* exstar_cmd = app.add_subcommand("exstar", "ex*(n, F) with a least witness");
    exstar_cmd->add_option("--n", n)->required();
    exstar_cmd->add_option("--graph", graph)->required();

    auto* witness = app.add_subcommand("witness", "check a witness pair (E, E0)");
    witness->add_option("--n", n)->required();
    witness->add_option("--graph", graph)->required();
    witness->add_option("--E", e_arg, "edge list JSON")->required();
    witness->add_option("--E0", e0_arg, "edge list JSON");

    auto* count_cmd = app.add_subcommand("count-induced", "vertex subsets inducing a member of F");
    count_cmd->add_option("--graph", graph)->required();
    count_cmd->add_option("--family", family)->required();

    auto* codec = app.add_subcommand("codec", "convert a graph between graph6 and JSON");
    codec->add_option("--input", graph)->required();
    codec->add_option("--to", codec_to)->check(CLI::IsMember({"graph6", "json", "both"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    nlohmann::json result;
    try {
        MeasureOptions options;
        options.workers = workers;
        if (auto env = exact_cap_from_env())
            options.exact_cap_bits = *env;
        if (exact_cap)
            options.exact_cap_bits = *exact_cap;

        if (measure->parsed()) {
            const auto a = pred.build();
            result = to_json(exact_measure(n, resolve_r(r, a), probability(p), a, options));
        } else if (cn->parsed()) {
            const auto fam = load_family(family);
            const auto orders = parse_ns(ns);
            result = nlohmann::json::array();
            for (const auto& point : cn_sequence(fam, probability(p), orders, options))
                result.push_back(to_json(point));
        } else if (mc->parsed()) {
            const auto a = pred.build();
            result = to_json(mc_measure(n, resolve_r(r, a), probability(p), a, samples, *seed, ci, workers));
        } else if (steiner->parsed()) {
            const auto demanded = lambda ? std::optional(parse_rational(*lambda)) : std::nullopt;
            SteinerRun best;
            if (algo == "greedy") {
                auto g = best_greedy(*r, m, n, restarts, *seed, workers);
                best = {std::move(g.system), g.seed, std::move(g.d_histogram)};
            } else {
                best = best_nibble(*r, m, n, restarts, *seed, nibble, workers);
            }
            const auto report = verify_system(best.system);
            result = {{"algo", algo},
                      {"r", *r},
                      {"m", m},
                      {"n", n},
                      {"seed", *seed},
                      {"restarts", restarts},
                      {"best_seed", best.seed},
                      {"d", best.system.d()},
                      {"report", to_json(report)},
                      {"maximality", to_json(check_maximal(best.system, *seed, 100000))},
                      {"system", system_to_json(best.system)},
                      {"d_histogram", histogram_json(best.histogram)},
                      {"lambda_met", demanded ? nlohmann::json(meets_lambda(report, *demanded)) : nlohmann::json(nullptr)}};
        } else if (verify->parsed()) {
            const auto sys = system_from_json(load_json(system));
            const auto demanded = lambda ? std::optional(parse_rational(*lambda)) : std::nullopt;
            const auto report = verify_system(sys);
            result = to_json(report);
            result["lambda_met"] = demanded ? nlohmann::json(meets_lambda(report, *demanded)) : nlohmann::json(nullptr);
            result["maximality"] = report.malformed.empty()
                                       ? to_json(check_maximal(sys, seed.value_or(0), 100000))
                                       : nlohmann::json(nullptr);
        } else if (lemma->parsed()) {
            auto inst = load_instance(instance);
            if (!nu.empty()) {
                inst.params.nu = parse_rational(nu);
                inst.has_nu = true;
            }
            if (!gamma.empty())
                inst.params.gamma = parse_rational(gamma);
            if (lambda)
                inst.params.lambda = parse_rational(*lambda);
            if (!inst.has_nu)
                throw ParameterError("lemma needs nu (params.nu or --nu)");
            result = to_json(lemma_report(inst.a, require_system(inst), require_family(inst), inst.params, inst.p, options));
        } else if (partition->parsed()) {
            auto inst = load_instance(instance);
            if (!nu.empty()) {
                inst.params.nu = parse_rational(nu);
                inst.has_nu = true;
            }
            const auto& sys = require_system(inst);
            const auto& fam = require_family(inst);
            const auto table = partition_table(inst.a, sys, fam, inst.p, options);
            const auto mu_m_b = *exact_measure(sys.m, sys.r, inst.p, EdgePredicate::forb(fam), options).exact;
            result = {{"table", to_json(table)},
                      {"mu_m_B", to_string(mu_m_b)},
                      {"projection", to_json(projection_bound_check(table, mu_m_b, table.d))},
                      {"tail_domination",
                       inst.has_nu ? to_json(tail_domination(table, inst.params.nu, mu_m_b)) : nlohmann::json(nullptr)}};
        } else if (tail->parsed()) {
            const auto nu_q = parse_rational(nu);
            const auto mu_q = parse_rational(mu);
            const auto value = tail_mass(nu_q, d, mu_q);
            result = {{"nu", to_string(nu_q)},
                      {"d", d},
                      {"mu", to_string(mu_q)},
                      {"tail_mass", to_string(value)},
                      {"tail_mass_float", round15(to_double(value))}};
        } else if (xset->parsed()) {
            Instance inst;
            if (!instance.empty())
                inst = load_instance(instance);
            if (xset->count("--n") > 0)
                inst.n = n;
            if (xset->count("--m") > 0)
                inst.m = m;
            if (!p.empty())
                inst.p = probability(p);
            else if (instance.empty())
                throw UsageError("xset needs --p or --instance");
            if (pred.given())
                inst.a = pred.build();
            if (!family.empty())
                inst.family = load_family(family);
            if (!gamma.empty())
                inst.params.gamma = parse_rational(gamma);
            if (!inst.m && inst.system)
                inst.m = inst.system->m;
            if (!inst.m)
                throw UsageError("xset needs --m (or params.m in the instance)");
            if (!inst.params.gamma && !inst.has_nu)
                throw UsageError("xset needs --gamma (or params.gamma / params.nu in the instance)");
            result = to_json(x_set(inst.a, require_family(inst), *inst.m, inst.params.effective_gamma(), inst.n, inst.p,
                                   options));
        } else if (floor_cmd->parsed()) {
            result = to_json(counting_floor(n, m, t, parse_rational(gamma), parse_rational(eta)));
        } else if (tau_cmd->parsed()) {
            const auto f = load_graph(graph);
            const auto res = tau(f);
            result = to_json(res);
            result["predicted_c_half"] = res.t == 0 ? nlohmann::json(nullptr) : nlohmann::json(to_string(Rational(1, res.t)));
        } else if (exstar_cmd->parsed()) {
            const auto f = load_graph(graph);
            const auto res = exstar(n, f, workers);
            result = to_json(res);
            result["witness_ok"] = witness_check(n, f, res.e, res.e0).ok;
        } else if (witness->parsed()) {
            result = to_json(witness_check(n, load_graph(graph), edge_list(e_arg), edge_list(e0_arg)));
        } else if (count_cmd->parsed()) {
            const auto g = load_graph(graph);
            const auto fam = load_family(family);
            const auto c = count_induced(g, fam);
            result = {{"count", c}, {"contains", c > 0}};
        } else if (codec->parsed()) {
            const auto g = load_graph(graph);
            result = nlohmann::json::object();
            if (codec_to != "json")
                result["graph6"] = to_graph6(g);
            if (codec_to != "graph6")
                result["json"] = graph_to_json(g);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (format == "csv")
        out << render_csv(result);
    else
        out << result.dump(2) << '\n';
    return 0;
}

} // namespace hlab::cli
