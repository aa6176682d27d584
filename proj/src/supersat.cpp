#include "hlab/supersat.hpp"

#include "hlab/binomial.hpp"
#include "hlab/codec.hpp"
#include "hlab/enumerate.hpp"
#include "hlab/errors.hpp"

#include <array>
#include <bit>
#include <numeric>

namespace hlab {

namespace {

void require_valid_system(const SteinerSystem& sys, const ForbiddenFamily& fam)
{
    if (fam.uniformity() != sys.r)
        throw ParameterError("family uniformity " + std::to_string(fam.uniformity()) + " differs from system r=" +
                             std::to_string(sys.r));
    const auto rep = verify_system(sys);
    if (!rep.valid)
        throw ParameterError("blocks do not form a partial Steiner system");
}

auto all_vertices(int n) -> Subset
{
    Subset v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

auto block_theta(const EdgePredicate& a, const Subset& block, const ForbiddenFamily& fam, int n, const Rational& p,
                 const MeasureOptions& options) -> Rational
{
    const auto pred = EdgePredicate::intersection({a, EdgePredicate::contains_on(fam, block)});
    return *exact_measure(n, fam.uniformity(), p, pred, options).exact;
}

auto tail_mass(const Rational& nu, std::uint64_t d, const Rational& mu_m_b) -> Rational
{
    if (nu < 0 || nu > 1)
        throw ParameterError("nu must lie in [0,1]");
    const auto cutoff = static_cast<std::uint64_t>(floor_nonneg(nu * d));
    Rational sum = 0;
    for (std::uint64_t i = 0; i <= cutoff; ++i)
        sum += Rational(binom(static_cast<std::int64_t>(d), static_cast<std::int64_t>(i))) * pow(mu_m_b, d - i);
    return sum;
}

auto lemma_report(const EdgePredicate& a, const SteinerSystem& sys, const ForbiddenFamily& fam,
                  const LemmaParameters& params, const Rational& p, const MeasureOptions& options) -> LemmaReport
{
    require_valid_system(sys, fam);
    check_exact_feasible(sys.n, sys.r, options);
    check_exact_feasible(sys.m, sys.r, options);
    if (params.nu < 0 || params.nu > 1)
        throw ParameterError("nu must lie in [0,1]");

    LemmaReport rep;
    rep.params = params;
    rep.d = sys.d();
    rep.gamma = params.effective_gamma();
    rep.nu = params.nu;
    rep.mu_a = *exact_measure(sys.n, sys.r, p, a, options).exact;

    const Rational threshold = rep.gamma * rep.mu_a;
    rep.theta_le_mu_a = true;
    for (std::uint64_t i = 0; i < rep.d; ++i) {
        auto theta = block_theta(a, sys.blocks[i], fam, sys.n, p, options);
        if (theta >= threshold)
            rep.index_set.push_back(i);
        if (theta > rep.mu_a)
            rep.theta_le_mu_a = false;
        rep.theta_sum += theta;
        rep.theta.push_back(std::move(theta));
    }
    rep.eta = rep.d == 0 ? Rational(0) : Rational(rep.index_set.size(), rep.d);

    const Rational d(rep.d);
    rep.theta_upper = (rep.eta * d + (1 - rep.eta) * rep.gamma * d) * rep.mu_a;
    rep.theta_bound_holds = rep.theta_sum <= rep.theta_upper;

    rep.mu_m_b = *exact_measure(sys.m, sys.r, p, EdgePredicate::forb(fam), options).exact;
    rep.tail = tail_mass(params.nu, rep.d, rep.mu_m_b);
    rep.tail_small = rep.tail <= rep.mu_a / 2;
    rep.chain_lhs = rep.eta + (1 - rep.eta) * rep.gamma;
    rep.chain_holds = rep.chain_lhs >= params.nu / 2;
    rep.implication_holds = !rep.tail_small || rep.chain_holds;

    if (params.lambda)
        rep.lambda_met = meets_lambda(verify_system(sys), *params.lambda);
    return rep;
}

auto partition_table(const EdgePredicate& a, const SteinerSystem& sys, const ForbiddenFamily& fam, const Rational& p,
                     const MeasureOptions& options) -> PartitionTable
{
    require_valid_system(sys, fam);
    if (sys.d() > kMaxPartitionBlocks)
        throw FeasibilityError("partition table indexes at most " + std::to_string(kMaxPartitionBlocks) +
                               " blocks, system has " + std::to_string(sys.d()));
    check_exact_feasible(sys.n, sys.r, options);

    const int n = sys.n;
    const int r = sys.r;
    const auto slots = binom(n, r);
    const CompiledPredicate in_a(a, n, r);
    std::vector<FamilyMatcher> blocks;
    for (const auto& b : sys.blocks)
        blocks.emplace_back(fam, n, b);

    using Cells = std::map<std::uint32_t, EdgeHistogram>;
    const auto parts = enumerate_masks<Cells>(
        static_cast<unsigned>(slots), options.workers, [] { return Cells{}; },
        [&](Cells& cells, std::uint64_t mask, std::uint64_t edges) {
            const std::array<std::uint64_t, 1> words{mask};
            if (!in_a(words, edges))
                return;
            std::uint32_t key = 0;
            for (std::size_t i = 0; i < blocks.size(); ++i)
                if (blocks[i].contains(words))
                    key |= std::uint32_t{1} << i;
            auto it = cells.try_emplace(key, slots).first;
            ++it->second.counts[edges];
        });
    Cells merged;
    for (const auto& part : parts)
        for (const auto& [key, hist] : part)
            merged.try_emplace(key, slots).first->second.merge(hist);

    PartitionTable table;
    table.d = sys.d();
    for (const auto& [key, hist] : merged) {
        auto measure = hist.weight(p);
        table.cell_sum += measure;
        table.weighted_sum += Rational(std::popcount(key)) * measure;
        table.cells.emplace(key, std::move(measure));
    }
    table.mu_a = *exact_measure(n, r, p, a, options).exact;
    for (const auto& b : sys.blocks) {
        table.theta.push_back(block_theta(a, b, fam, n, p, options));
        table.theta_sum += table.theta.back();
    }
    table.partition_holds = table.cell_sum == table.mu_a;
    table.identity_holds = table.weighted_sum == table.theta_sum;
    return table;
}

auto projection_bound_check(const PartitionTable& table, const Rational& mu_m_b, std::uint64_t d) -> ProjectionReport
{
    ProjectionReport rep;
    rep.all_hold = true;
    for (const auto& [key, measure] : table.cells) {
        CellBound cb;
        cb.cell = key;
        cb.size = std::popcount(key);
        if (static_cast<std::uint64_t>(cb.size) > d)
            throw ParameterError("cell index uses more than d blocks");
        cb.measure = measure;
        cb.bound = pow(mu_m_b, d - static_cast<std::uint64_t>(cb.size));
        cb.slack = cb.bound - cb.measure;
        cb.holds = cb.measure <= cb.bound;
        rep.all_hold = rep.all_hold && cb.holds;
        rep.cells.push_back(std::move(cb));
    }
    return rep;
}

auto tail_domination(const PartitionTable& table, const Rational& nu, const Rational& mu_m_b) -> TailDomination
{
    TailDomination rep;
    rep.tail = tail_mass(nu, table.d, mu_m_b);
    rep.cutoff = static_cast<std::uint64_t>(floor_nonneg(nu * table.d));
    for (const auto& [key, measure] : table.cells)
        if (static_cast<std::uint64_t>(std::popcount(key)) <= rep.cutoff)
            rep.small_mass += measure;
    rep.dominates = rep.small_mass <= rep.tail;
    return rep;
}

namespace {

struct XSetAcc {
    std::vector<EdgeHistogram> per_set;
    EdgeHistogram in_a;
    std::uint64_t best_count = 0;
    std::optional<std::uint64_t> best_mask;
};

} // namespace

auto x_set(const EdgePredicate& a, const ForbiddenFamily& fam, int m, const Rational& gamma, int n, const Rational& p,
           const MeasureOptions& options) -> SupersatReport
{
    const int r = fam.uniformity();
    if (m < 1 || m > n)
        throw ParameterError("x_set needs 1 <= m <= n");
    if (gamma < 0)
        throw ParameterError("gamma must be nonnegative");
    check_exact_feasible(n, r, options);
    const auto slots = binom(n, r);
    const auto msets = all_subsets_of(all_vertices(n), m);
    constexpr std::size_t kMaxMSets = 4096;
    if (msets.size() > kMaxMSets)
        throw FeasibilityError("x_set enumerates at most " + std::to_string(kMaxMSets) + " m-subsets");

    const CompiledPredicate in_a(a, n, r);
    std::vector<FamilyMatcher> matchers;
    for (const auto& dset : msets)
        matchers.emplace_back(fam, n, dset);

    const auto parts = enumerate_masks<XSetAcc>(
        static_cast<unsigned>(slots), options.workers,
        [&] { return XSetAcc{std::vector<EdgeHistogram>(msets.size(), EdgeHistogram(slots)), EdgeHistogram(slots), 0, std::nullopt}; },
        [&](XSetAcc& acc, std::uint64_t mask, std::uint64_t edges) {
            const std::array<std::uint64_t, 1> words{mask};
            if (!in_a(words, edges))
                return;
            ++acc.in_a.counts[edges];
            std::uint64_t count = 0;
            for (std::size_t i = 0; i < matchers.size(); ++i) {
                if (matchers[i].contains(words)) {
                    ++acc.per_set[i].counts[edges];
                    ++count;
                }
            }
            if (!acc.best_mask || count > acc.best_count) {
                acc.best_count = count;
                acc.best_mask = mask;
            }
        });

    XSetAcc total{std::vector<EdgeHistogram>(msets.size(), EdgeHistogram(slots)), EdgeHistogram(slots), 0, std::nullopt};
    for (const auto& part : parts) {
        total.in_a.merge(part.in_a);
        for (std::size_t i = 0; i < msets.size(); ++i)
            total.per_set[i].merge(part.per_set[i]);
        // Chunks are in increasing mask order, so strict improvement keeps the lowest mask.
        if (part.best_mask && (!total.best_mask || part.best_count > total.best_count)) {
            total.best_count = part.best_count;
            total.best_mask = part.best_mask;
        }
    }

    SupersatReport rep;
    rep.n = n;
    rep.m = m;
    rep.t = fam.min_order();
    rep.gamma = gamma;
    rep.mu_a = total.in_a.weight(p);
    const Rational threshold = gamma * rep.mu_a;
    for (std::size_t i = 0; i < msets.size(); ++i) {
        const auto theta = total.per_set[i].weight(p);
        rep.averaging_lhs += theta;
        if (theta >= threshold)
            rep.x.push_back(msets[i]);
    }
    rep.x_size = rep.x.size();
    rep.eta_x = Rational(rep.x_size, msets.size());
    rep.averaging_rhs = threshold * rep.x_size;
    rep.averaging_holds = rep.averaging_lhs >= rep.averaging_rhs;

    if (total.best_mask) {
        const std::array<std::uint64_t, 1> words{*total.best_mask};
        rep.best_graph = RUniformGraph::from_mask(n, r, words);
        rep.best_mset_count = total.best_count;
        rep.distinct_copies = count_induced(*rep.best_graph, fam);
    }
    rep.best_meets_gamma_x = Rational(rep.best_mset_count) >= gamma * rep.x_size;
    const int t = rep.t;
    rep.proviso = n >= 2 * t;
    if (t <= m) {
        const BigInt per_copy(binom(n - t, m - t));
        rep.copies_cover_msets = BigInt(rep.distinct_copies) * per_copy >= BigInt(rep.best_mset_count);
    } else {
        rep.copies_cover_msets = rep.best_mset_count == 0;
    }
    rep.delta_floor = gamma * rep.eta_x * Rational(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(t)),
                                                   boost::multiprecision::pow(BigInt(2 * m), static_cast<unsigned>(t)));
    rep.floor_met = Rational(rep.distinct_copies) >= rep.delta_floor;
    return rep;
}

auto counting_floor(int n, int m, int t, const Rational& gamma, const Rational& eta) -> FloorReport
{
    if (t < 0 || t > m || m > n)
        throw ParameterError("counting_floor needs 0 <= t <= m <= n");
    FloorReport rep;
    rep.proviso = n >= 2 * t;
    rep.ratio = gamma * eta * Rational(binom(n, m), binom(n - t, m - t));
    if (m == 0) {
        rep.floor = t == 0 ? gamma * eta : Rational(0);
    } else {
        rep.floor = gamma * eta * Rational(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(t)),
                                           boost::multiprecision::pow(BigInt(2 * m), static_cast<unsigned>(t)));
    }
    rep.ok = rep.ratio >= rep.floor;
    return rep;
}

namespace {

auto rationals(const std::vector<Rational>& v) -> nlohmann::json
{
    auto out = nlohmann::json::array();
    for (const auto& q : v)
        out.push_back(to_string(q));
    return out;
}

auto optional_rational(const std::optional<Rational>& q) -> nlohmann::json
{
    return q ? nlohmann::json(to_string(*q)) : nlohmann::json(nullptr);
}

auto cell_members(std::uint32_t key) -> std::vector<int>
{
    std::vector<int> s;
    for (int i = 0; i < 32; ++i)
        if (key & (std::uint32_t{1} << i))
            s.push_back(i);
    return s;
}

} // namespace

auto to_json(const LemmaReport& rep) -> nlohmann::json
{
    return {{"d", rep.d},
            {"mu_A", to_string(rep.mu_a)},
            {"theta", rationals(rep.theta)},
            {"I", rep.index_set},
            {"eta", to_string(rep.eta)},
            {"gamma", to_string(rep.gamma)},
            {"nu", to_string(rep.nu)},
            {"epsilon", optional_rational(rep.params.epsilon)},
            {"epsilon_prime", optional_rational(rep.params.epsilon_prime)},
            {"lambda", optional_rational(rep.params.lambda)},
            {"lambda_met", rep.lambda_met ? nlohmann::json(*rep.lambda_met) : nlohmann::json(nullptr)},
            {"theta_le_mu_A", rep.theta_le_mu_a},
            {"theta_sum", to_string(rep.theta_sum)},
            {"theta_upper", to_string(rep.theta_upper)},
            {"theta_bound_holds", rep.theta_bound_holds},
            {"mu_m_B", to_string(rep.mu_m_b)},
            {"tail_mass", to_string(rep.tail)},
            {"tail_small", rep.tail_small},
            {"chain_lhs", to_string(rep.chain_lhs)},
            {"chain_holds", rep.chain_holds},
            {"implication_holds", rep.implication_holds}};
}

auto to_json(const PartitionTable& table) -> nlohmann::json
{
    auto cells = nlohmann::json::array();
    for (const auto& [key, measure] : table.cells)
        cells.push_back({{"S", cell_members(key)}, {"measure", to_string(measure)}});
    return {{"d", table.d},
            {"cells", std::move(cells)},
            {"mu_A", to_string(table.mu_a)},
            {"theta", rationals(table.theta)},
            {"cell_sum", to_string(table.cell_sum)},
            {"weighted_sum", to_string(table.weighted_sum)},
            {"theta_sum", to_string(table.theta_sum)},
            {"partition_holds", table.partition_holds},
            {"identity_holds", table.identity_holds}};
}

auto to_json(const ProjectionReport& rep) -> nlohmann::json
{
    auto cells = nlohmann::json::array();
    for (const auto& c : rep.cells)
        cells.push_back({{"S", cell_members(c.cell)},
                         {"measure", to_string(c.measure)},
                         {"bound", to_string(c.bound)},
                         {"slack", to_string(c.slack)},
                         {"holds", c.holds}});
    return {{"cells", std::move(cells)}, {"all_hold", rep.all_hold}};
}

auto to_json(const TailDomination& rep) -> nlohmann::json
{
    return {{"cutoff", rep.cutoff},
            {"tail_mass", to_string(rep.tail)},
            {"small_mass", to_string(rep.small_mass)},
            {"dominates", rep.dominates}};
}

auto to_json(const SupersatReport& rep) -> nlohmann::json
{
    return {{"n", rep.n},
            {"m", rep.m},
            {"t", rep.t},
            {"gamma", to_string(rep.gamma)},
            {"mu_A", to_string(rep.mu_a)},
            {"x_size", rep.x_size},
            {"X", rep.x},
            {"eta_x", to_string(rep.eta_x)},
            {"averaging_lhs", to_string(rep.averaging_lhs)},
            {"averaging_rhs", to_string(rep.averaging_rhs)},
            {"averaging_holds", rep.averaging_holds},
            {"best_graph", rep.best_graph ? graph_to_json(*rep.best_graph) : nlohmann::json(nullptr)},
            {"best_mset_count", rep.best_mset_count},
            {"best_meets_gamma_x", rep.best_meets_gamma_x},
            {"distinct_copies", rep.distinct_copies},
            {"copies_cover_msets", rep.copies_cover_msets},
            {"delta_floor", to_string(rep.delta_floor)},
            {"delta_floor_float", round15(to_double(rep.delta_floor))},
            {"floor_met", rep.floor_met},
            {"proviso", rep.proviso}};
}

auto to_json(const FloorReport& rep) -> nlohmann::json
{
    return {{"ratio", to_string(rep.ratio)},
            {"ratio_float", round15(to_double(rep.ratio))},
            {"floor", to_string(rep.floor)},
            {"floor_float", round15(to_double(rep.floor))},
            {"ok", rep.ok},
            {"proviso", rep.proviso}};
}

} // namespace hlab
