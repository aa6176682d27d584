// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include "oracles.hpp"
#include "properties.hpp"

#include "hlab/binomial.hpp"
#include "hlab/extremal.hpp"
#include "hlab/family.hpp"
#include "hlab/measure.hpp"
#include "hlab/named.hpp"
#include "hlab/steiner.hpp"
#include "hlab/supersat.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace hlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
    const bool pass = out.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %2d %s | %s | %.3f s", pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
    if (limit_seconds > 0)
        std::printf(" (limit %.0f s)", limit_seconds);
    std::printf("\n");
    std::fflush(stdout);
}

auto k3_family() -> ForbiddenFamily
{
    return normalize_family({complete_graph(3)});
}

auto instance_system() -> SteinerSystem
{
    return {2, 3, 6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
}

} // namespace

int main()
{
    const Rational half(1, 2);

    criterion(1, "tau(C4) = 2, predicted c(1/2,{C4}) = 1/2", 1.0, [] {
        const auto t = tau(cycle_graph(4));
        const auto c = predicted_c_half(cycle_graph(4));
        return Outcome{t.t == 2 && c == Rational(1, 2), "t=" + std::to_string(t.t) + " c=" + to_string(c)};
    });

    criterion(2, "exact Forb(K3) measures at p=1/2", 1.0, [&] {
        const auto mu3 = *exact_measure(3, 2, half, EdgePredicate::forb(k3_family())).exact;
        const auto mu4 = *exact_measure(4, 2, half, EdgePredicate::forb(k3_family())).exact;
        const auto oracle4 = Rational(64 - oracle::triangle_containing_count(4), 64);
        return Outcome{mu3 == Rational(7, 8) && mu4 == Rational(41, 64) && mu4 == oracle4,
                       "mu3=" + to_string(mu3) + " mu4=" + to_string(mu4) + " oracle=" + to_string(oracle4) +
                           " (exact)"};
    });

    criterion(3, "c_n of Forb(K3) strictly increasing on n=2..7, workers 1 vs 8", 60.0, [&] {
        const std::vector<int> ns{2, 3, 4, 5, 6, 7};
        MeasureOptions one;
        const auto start = std::chrono::steady_clock::now();
        const auto serial = cn_sequence(k3_family(), half, ns, one);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        MeasureOptions eight;
        eight.workers = 8;
        const auto parallel = cn_sequence(k3_family(), half, ns, eight);
        bool increasing = true;
        bool identical = serial.size() == parallel.size();
        std::string values;
        for (std::size_t i = 0; i < serial.size(); ++i) {
            if (i > 0)
                increasing = increasing && serial[i - 1].c_n < serial[i].c_n;
            identical = identical && to_json(serial[i]) == to_json(parallel[i]);
            values += (i ? "," : "") + to_string(serial[i].c_n, 6);
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, " single-threaded %.2f s", secs);
        return Outcome{increasing && identical && secs < 60.0,
                       "c_n=[" + values + "] identical=" + (identical ? "yes" : "no") + timing};
    });

    criterion(4, "Monte-Carlo 95% CI calibration over 200 seeds", 30.0, [&] {
        const auto pred = EdgePredicate::forb(k3_family());
        const auto exact = to_double(*exact_measure(5, 2, half, pred).exact);
        int covered = 0;
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const auto res = mc_measure(5, 2, half, pred, 10000, seed, 0.95, 1);
            covered += res.ci_low <= exact && exact <= res.ci_high ? 1 : 0;
        }
        return Outcome{covered >= 180, std::to_string(covered) + "/200 intervals contain " + std::to_string(exact) +
                                           " (need >= 180)"};
    });

    criterion(5, "greedy (2,3,15) valid/bounded/maximal; best (2,3,7) reaches 7", 60.0, [] {
        int valid = 0;
        int bounded = 0;
        int maximal = 0;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto sys = greedy_system(2, 3, 15, seed);
            valid += verify_system(sys).valid ? 1 : 0;
            bounded += sys.d() <= 35 ? 1 : 0;
            const auto m = check_maximal(sys);
            maximal += m.exhaustive && !m.addable ? 1 : 0;
        }
        const auto best = best_greedy(2, 3, 7, 10000, 1, 1);
        const int oracle_max = oracle::max_packing(2, 3, 7);
        return Outcome{valid == 1000 && bounded == 1000 && maximal == 1000 && best.system.d() == 7 && oracle_max == 7,
                       "valid=" + std::to_string(valid) + " d<=35:" + std::to_string(bounded) +
                           " maximal=" + std::to_string(maximal) + "/1000; best d=" + std::to_string(best.system.d()) +
                           " (seed " + std::to_string(best.seed) + "), branch-and-bound max=" +
                           std::to_string(oracle_max)};
    });

    criterion(6, "cell identity sum |S| mu(A_S) = sum theta_i and sum mu(A_S) = mu(A)", 10.0, [&] {
        const auto t = partition_table(EdgePredicate::min_edges(8), instance_system(), k3_family(), half);
        return Outcome{t.identity_holds && t.partition_holds && t.weighted_sum == t.theta_sum && t.cell_sum == t.mu_a,
                       "weighted=" + to_string(t.weighted_sum) + " theta_sum=" + to_string(t.theta_sum) +
                           " cell_sum=" + to_string(t.cell_sum) + " mu(A)=" + to_string(t.mu_a) + " (exact)"};
    });

    criterion(7, "projection bound mu(A_S) <= (7/8)^(4-|S|); equality for the full space", 10.0, [&] {
        const Rational mu_b(7, 8);
        const auto t = partition_table(EdgePredicate::min_edges(8), instance_system(), k3_family(), half);
        const auto proj = projection_bound_check(t, mu_b, 4);
        const auto full = partition_table(EdgePredicate::always_true(), instance_system(), k3_family(), half);
        const auto empty = full.cells.count(0) ? full.cells.at(0) : Rational(0);
        return Outcome{proj.all_hold && proj.cells.size() == t.cells.size() && empty == pow(mu_b, 4),
                       std::to_string(proj.cells.size()) + " cells checked; full-space mu(A_empty)=" + to_string(empty) +
                           " (exact)"};
    });

    criterion(8, "tail_mass endpoints and domination of the small-|S| mass", 10.0, [&] {
        bool endpoints = true;
        for (const auto& mu : {Rational(7, 8), Rational(1, 3), Rational(0), Rational(1)})
            for (std::uint64_t d = 0; d <= 9; ++d)
                endpoints = endpoints && tail_mass(Rational(0), d, mu) == pow(mu, d) &&
                            tail_mass(Rational(1), d, mu) == pow(1 + mu, d);
        const auto t = partition_table(EdgePredicate::min_edges(8), instance_system(), k3_family(), half);
        const auto dom = tail_domination(t, Rational(1, 2), Rational(7, 8));
        return Outcome{endpoints && dom.dominates, "tail(1/2)=" + to_string(dom.tail) +
                                                       " >= small mass " + to_string(dom.small_mass) + " (exact)"};
    });

    criterion(9, "counting_floor ok on r <= t <= m <= 8, n <= 40, n >= 2t", 5.0, [] {
        std::uint64_t points = 0;
        std::uint64_t ok = 0;
        std::uint64_t boundary = 0;
        const std::pair<Rational, Rational> weights[] = {
            {Rational(1), Rational(1)}, {Rational(1, 16), Rational(1, 3)}, {Rational(5, 7), Rational(1, 1000)}};
        for (int r = 2; r <= 3; ++r)
            for (int m = r; m <= 8; ++m)
                for (int t = r; t <= m; ++t)
                    for (int n = std::max(m, 2 * t); n <= 40; ++n)
                        for (const auto& [g, e] : weights) {
                            ++points;
                            boundary += n == 2 * t ? 1 : 0;
                            ok += counting_floor(n, m, t, g, e).ok ? 1 : 0;
                        }
        return Outcome{ok == points && boundary > 0, std::to_string(ok) + "/" + std::to_string(points) +
                                                         " grid points ok (" + std::to_string(boundary) +
                                                         " at n = 2t)"};
    });

    criterion(10, "x_set: A={K6} gives |X|=20, 20 copies; A=Forb(K3) gives |X|=0", 10.0, [&] {
        const Rational gamma(1, 4);
        const auto k6 = x_set(EdgePredicate::explicit_set({complete_graph(6)}), k3_family(), 3, gamma, 6, half);
        const auto forb = x_set(EdgePredicate::forb(k3_family()), k3_family(), 3, gamma, 6, half);
        return Outcome{k6.x_size == 20 && k6.distinct_copies == 20 && forb.x_size == 0,
                       "|X|=" + std::to_string(k6.x_size) + " copies=" + std::to_string(k6.distinct_copies) +
                           " |X_forb|=" + std::to_string(forb.x_size) + " (exact)"};
    });

    criterion(11, "ex*(n,K3) = 2, 4, 6 for n = 3, 4, 5 with checked witnesses", 120.0, [] {
        const auto k3 = complete_graph(3);
        const auto oracle_k3 = oracle::adjacency(k3);
        bool all = true;
        std::string values;
        const std::uint64_t expected[] = {2, 4, 6};
        for (int n = 3; n <= 5; ++n) {
            const auto res = exstar(n, k3);
            const int naive = oracle::exstar(n, oracle_k3);
            const bool ok = witness_check(n, k3, res.e, res.e0).ok;
            all = all && res.value == expected[n - 3] && static_cast<int>(res.value) == naive && ok;
            values += (n > 3 ? "," : "") + std::to_string(res.value);
        }
        return Outcome{all, "ex*=[" + values + "] matching the exhaustive (E,E0) search"};
    });

    criterion(12, "property suites pass; transcripts identical across runs and worker counts", 0.0, [] {
        props::Context a(props::kMasterSeed, 1);
        props::all_properties(a);
        props::Context b(props::kMasterSeed, 1);
        props::all_properties(b);
        props::Context c(props::kMasterSeed, 8);
        props::all_properties(c);
        const bool clean = a.failures().empty() && b.failures().empty() && c.failures().empty();
        const bool same = a.transcript() == b.transcript() && a.transcript() == c.transcript();
        std::string detail = std::to_string(a.checks()) + " checks, " + std::to_string(a.failures().size()) +
                             " failures; transcript " + std::to_string(a.transcript().size()) + " bytes " +
                             (same ? "identical" : "DIFFERS");
        if (!a.failures().empty())
            detail += "; first failure: " + a.failures().front();
        return Outcome{clean && same, detail};
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
