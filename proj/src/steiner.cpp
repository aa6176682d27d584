#include "hlab/steiner.hpp"

#include "hlab/binomial.hpp"
#include "hlab/errors.hpp"
#include "hlab/parallel.hpp"
#include "hlab/rng.hpp"

#include <algorithm>
#include <numeric>

namespace hlab {

namespace {

void check_parameters(int r, int m, int n)
{
    if (r < 1 || !(r < m) || m > n)
        throw ParameterError("Steiner parameters need 1 <= r < m <= n, got (" + std::to_string(r) + "," +
                             std::to_string(m) + "," + std::to_string(n) + ")");
}

auto candidate_count(int m, int n) -> std::uint64_t
{
    std::uint64_t c = 0;
    if (!try_binom(n, m, c) || c > kMaxCandidateBlocks)
        throw FeasibilityError("C(" + std::to_string(n) + "," + std::to_string(m) + ") candidate blocks exceed " +
                               std::to_string(kMaxCandidateBlocks));
    return c;
}

/// Covered r-subsets as a bit vector over colex ranks.
class Packing {
public:
    Packing(int r, int m, int n)
        : r_(r), m_(m), n_(n), rsets_(binom(n, r)), covered_(static_cast<std::size_t>((rsets_ + 63) / 64), 0),
          local_(all_subsets_of(first_combination(m), r)), ranks_(local_.size()), scratch_(static_cast<std::size_t>(r))
    {
    }

    auto rsets() const noexcept -> std::uint64_t { return rsets_; }
    auto covered_count() const noexcept -> std::uint64_t { return covered_count_; }
    auto local_count() const noexcept -> std::size_t { return local_.size(); }

    auto is_covered(std::uint64_t rank) const noexcept -> bool { return (covered_[rank >> 6] >> (rank & 63)) & 1U; }

    /// Fills the r-subset ranks of `block` into an internal buffer.
    auto ranks_of(const Subset& block) -> const std::vector<std::uint64_t>&
    {
        for (std::size_t j = 0; j < local_.size(); ++j) {
            for (int i = 0; i < r_; ++i)
                scratch_[i] = block[static_cast<std::size_t>(local_[j][i])];
            ranks_[j] = rank_subset_unchecked(scratch_);
        }
        return ranks_;
    }

    auto is_free(const Subset& block) -> bool
    {
        for (const auto rank : ranks_of(block))
            if (is_covered(rank))
                return false;
        return true;
    }

    /// Adds `block` if all its r-subsets are uncovered.
    auto try_add(const Subset& block) -> bool
    {
        if (!is_free(block))
            return false;
        add_unchecked(block);
        return true;
    }

    void add_unchecked(const Subset& block)
    {
        for (const auto rank : ranks_of(block)) {
            covered_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
            ++covered_count_;
        }
        blocks_.push_back(block);
    }

    auto finish() && -> SteinerSystem
    {
        std::sort(blocks_.begin(), blocks_.end());
        return SteinerSystem{r_, m_, n_, std::move(blocks_)};
    }

private:
    int r_;
    int m_;
    int n_;
    std::uint64_t rsets_;
    std::vector<std::uint64_t> covered_;
    std::uint64_t covered_count_ = 0;
    std::vector<Subset> local_;
    std::vector<std::uint64_t> ranks_;
    Subset scratch_;
    std::vector<Subset> blocks_;
};

void greedy_complete(Packing& packing, int m, std::uint64_t candidates, Rng& rng)
{
    std::vector<std::uint64_t> order(static_cast<std::size_t>(candidates));
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    for (std::size_t i = order.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(order[i - 1], order[j]);
    }
    for (const auto c : order)
        packing.try_add(unrank_subset(c, m));
}

} // namespace

auto verify_system(const SteinerSystem& sys) -> SteinerReport
{
    SteinerReport rep;
    rep.d = sys.d();
    const bool params_ok = sys.r >= 1 && sys.r < sys.m && sys.m <= sys.n;
    if (!params_ok)
        rep.malformed.push_back("parameters must satisfy 1 <= r < m <= n");

    std::uint64_t rsets = 0;
    std::uint64_t per_block = 0;
    if (sys.r >= 1 && sys.n >= 0 && try_binom(sys.n, sys.r, rsets) && try_binom(sys.m, sys.r, per_block)) {
        std::vector<std::uint8_t> multiplicity(static_cast<std::size_t>(rsets), 0);
        const auto local = all_subsets_of(first_combination(std::max(sys.m, 0)), sys.r);
        Subset scratch(static_cast<std::size_t>(sys.r));
        for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
            const auto& block = sys.blocks[b];
            bool ok = static_cast<int>(block.size()) == sys.m;
            for (std::size_t i = 0; ok && i < block.size(); ++i)
                ok = block[i] >= 0 && block[i] < sys.n && (i == 0 || block[i] > block[i - 1]);
            if (!ok) {
                rep.malformed.push_back("block " + std::to_string(b) + " is not a sorted " + std::to_string(sys.m) +
                                        "-subset of 0.." + std::to_string(sys.n - 1));
                continue;
            }
            for (const auto& ls : local) {
                for (int i = 0; i < sys.r; ++i)
                    scratch[i] = block[static_cast<std::size_t>(ls[i])];
                auto& count = multiplicity[static_cast<std::size_t>(rank_subset_unchecked(scratch))];
                if (count < 255)
                    ++count;
            }
        }
        for (std::uint64_t k = 0; k < rsets; ++k) {
            const auto c = multiplicity[static_cast<std::size_t>(k)];
            if (c >= 1)
                ++rep.covered;
            if (c >= 2)
                rep.violations.push_back(unrank_subset(k, sys.r));
        }
        rep.uncovered_fraction = rsets == 0 ? Rational(0) : Rational(1) - Rational(rep.covered, rsets);
        rep.within_block_bound = BigInt(rep.d) * per_block <= BigInt(rsets);
    } else if (params_ok) {
        rep.malformed.push_back("C(n,r) too large to verify");
    }
    rep.valid = rep.malformed.empty() && rep.violations.empty();
    return rep;
}

auto meets_lambda(const SteinerReport& report, const Rational& lambda) -> bool
{
    return report.uncovered_fraction <= lambda;
}

auto greedy_system(int r, int m, int n, std::uint64_t seed) -> SteinerSystem
{
    check_parameters(r, m, n);
    const auto candidates = candidate_count(m, n);
    Packing packing(r, m, n);
    Rng rng(seed);
    greedy_complete(packing, m, candidates, rng);
    return std::move(packing).finish();
}

auto nibble_system(int r, int m, int n, std::uint64_t seed, const NibbleOptions& options) -> SteinerSystem
{
    check_parameters(r, m, n);
    if (!(options.bite > 0 && options.bite < 1))
        throw ParameterError("bite must lie in (0,1)");
    if (options.rounds < 0)
        throw ParameterError("rounds must be nonnegative");
    const auto candidates = candidate_count(m, n);
    Packing packing(r, m, n);
    Rng rng(seed);

    std::vector<std::uint32_t> hits(static_cast<std::size_t>(packing.rsets()), 0);
    for (int round = 0; round < options.rounds; ++round) {
        std::vector<Subset> available;
        auto block = first_combination(m);
        do {
            if (packing.is_free(block))
                available.push_back(block);
        } while (next_combination(block, n));
        const auto uncovered = packing.rsets() - packing.covered_count();
        if (available.empty() || uncovered == 0)
            break;
        const double degree = static_cast<double>(available.size()) * static_cast<double>(packing.local_count()) /
                              static_cast<double>(uncovered);
        const double q = std::min(1.0, options.bite / degree);

        std::vector<const Subset*> selected;
        for (const auto& b : available)
            if (rng.unit() < q)
                selected.push_back(&b);
        for (const auto* b : selected)
            for (const auto rank : packing.ranks_of(*b))
                ++hits[static_cast<std::size_t>(rank)];
        std::vector<const Subset*> kept;
        for (const auto* b : selected) {
            const auto& ranks = packing.ranks_of(*b);
            if (std::all_of(ranks.begin(), ranks.end(), [&](auto rank) { return hits[static_cast<std::size_t>(rank)] == 1; }))
                kept.push_back(b);
        }
        for (const auto* b : selected)
            for (const auto rank : packing.ranks_of(*b))
                hits[static_cast<std::size_t>(rank)] = 0;
        for (const auto* b : kept)
            packing.add_unchecked(*b);
    }
    greedy_complete(packing, m, candidates, rng);
    return std::move(packing).finish();
}

auto permute_system(const SteinerSystem& sys, std::span<const int> sigma) -> SteinerSystem
{
    if (static_cast<int>(sigma.size()) != sys.n)
        throw ParameterError("permutation length differs from n");
    std::vector<char> seen(static_cast<std::size_t>(sys.n), 0);
    for (const int v : sigma) {
        if (v < 0 || v >= sys.n || seen[static_cast<std::size_t>(v)])
            throw ParameterError("sigma is not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    SteinerSystem out{sys.r, sys.m, sys.n, {}};
    out.blocks.reserve(sys.blocks.size());
    for (const auto& b : sys.blocks) {
        Subset image;
        image.reserve(b.size());
        for (const int v : b) {
            if (v < 0 || v >= sys.n)
                throw ParameterError("block vertex out of range");
            image.push_back(sigma[static_cast<std::size_t>(v)]);
        }
        std::sort(image.begin(), image.end());
        out.blocks.push_back(std::move(image));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

auto check_maximal(const SteinerSystem& sys, std::uint64_t sample_seed, std::uint64_t samples) -> MaximalityReport
{
    check_parameters(sys.r, sys.m, sys.n);
    if (!verify_system(sys).malformed.empty())
        throw ParameterError("maximality check needs well-formed blocks");
    Packing packing(sys.r, sys.m, sys.n);
    for (const auto& b : sys.blocks)
        packing.add_unchecked(b);

    MaximalityReport rep;
    std::uint64_t total = 0;
    rep.exhaustive = try_binom(sys.n, sys.m, total) && total <= kMaxCandidateBlocks;
    if (rep.exhaustive) {
        auto block = first_combination(sys.m);
        do {
            ++rep.candidates_checked;
            if (packing.is_free(block)) {
                rep.addable = block;
                break;
            }
        } while (next_combination(block, sys.n));
        return rep;
    }
    Rng rng(sample_seed);
    std::vector<int> pool(static_cast<std::size_t>(sys.n));
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < sys.m; ++i) {
            const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(sys.n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        Subset block(pool.begin(), pool.begin() + sys.m);
        std::sort(block.begin(), block.end());
        ++rep.candidates_checked;
        if (packing.is_free(block)) {
            rep.addable = block;
            break;
        }
    }
    return rep;
}

auto best_greedy(int r, int m, int n, std::uint64_t restarts, std::uint64_t seed, int workers) -> GreedyBest
{
    check_parameters(r, m, n);
    candidate_count(m, n);
    if (restarts == 0)
        throw ParameterError("restarts must be at least 1");
    constexpr std::uint64_t kBatch = 64;
    const auto batches = static_cast<std::size_t>((restarts + kBatch - 1) / kBatch);
    const auto sizes = map_chunks<std::vector<std::uint64_t>>(batches, workers, [&](std::size_t b) {
        std::vector<std::uint64_t> d;
        const std::uint64_t begin = b * kBatch;
        const std::uint64_t end = std::min(restarts, begin + kBatch);
        for (std::uint64_t i = begin; i < end; ++i)
            d.push_back(greedy_system(r, m, n, seed + i).d());
        return d;
    });
    GreedyBest best;
    best.restarts = restarts;
    std::uint64_t best_d = 0;
    std::uint64_t best_i = 0;
    std::uint64_t i = 0;
    for (const auto& batch : sizes) {
        for (const auto d : batch) {
            ++best.d_histogram[d];
            if (d > best_d || i == 0) {
                best_d = d;
                best_i = i;
            }
            ++i;
        }
    }
    best.seed = seed + best_i;
    best.system = greedy_system(r, m, n, best.seed);
    return best;
}

auto system_to_json(const SteinerSystem& sys) -> nlohmann::json
{
    return {{"r", sys.r}, {"m", sys.m}, {"n", sys.n}, {"blocks", sys.blocks}};
}

auto system_from_json(const nlohmann::json& j) -> SteinerSystem
{
    if (!j.is_object())
        throw ParseError("system JSON must be an object");
    for (const char* key : {"r", "m", "n", "blocks"})
        if (!j.contains(key))
            throw ParseError(std::string("system JSON is missing \"") + key + "\"");
    SteinerSystem sys;
    try {
        sys.r = j["r"].get<int>();
        sys.m = j["m"].get<int>();
        sys.n = j["n"].get<int>();
        sys.blocks = j["blocks"].get<std::vector<Subset>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("system JSON has fields of the wrong type: ") + e.what());
    }
    for (auto& b : sys.blocks)
        std::sort(b.begin(), b.end());
    std::sort(sys.blocks.begin(), sys.blocks.end());
    return sys;
}

auto to_json(const SteinerReport& report) -> nlohmann::json
{
    return {{"valid", report.valid},
            {"d", report.d},
            {"covered", report.covered},
            {"uncovered_fraction", to_string(report.uncovered_fraction)},
            {"uncovered_fraction_float", round15(to_double(report.uncovered_fraction))},
            {"within_block_bound", report.within_block_bound},
            {"violations", report.violations},
            {"malformed", report.malformed}};
}

auto to_json(const MaximalityReport& report) -> nlohmann::json
{
    return {{"exhaustive", report.exhaustive},
            {"candidates_checked", report.candidates_checked},
            {"maximal", !report.addable.has_value()},
            {"addable", report.addable ? nlohmann::json(*report.addable) : nlohmann::json(nullptr)}};
}

auto to_json(const GreedyBest& best) -> nlohmann::json
{
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [d, count] : best.d_histogram)
        histogram[std::to_string(d)] = count;
    return {{"seed", best.seed},
            {"restarts", best.restarts},
            {"system", system_to_json(best.system)},
            {"d_histogram", std::move(histogram)}};
}

} // namespace hlab
