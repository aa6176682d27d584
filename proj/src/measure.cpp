#include "hlab/measure.hpp"

#include "hlab/binomial.hpp"
#include "hlab/enumerate.hpp"
#include "hlab/errors.hpp"
#include "hlab/hypergraph.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <array>
#include <string>

namespace hlab {

auto EdgeHistogram::total() const noexcept -> std::uint64_t
{
    std::uint64_t t = 0;
    for (const auto c : counts)
        t += c;
    return t;
}

void EdgeHistogram::merge(const EdgeHistogram& other)
{
    if (other.counts.size() != counts.size())
        throw ParameterError("merging histograms of different sizes");
    for (std::size_t e = 0; e < counts.size(); ++e)
        counts[e] += other.counts[e];
}

auto EdgeHistogram::weight(const Rational& p) const -> Rational
{
    if (p < 0 || p > 1)
        throw ParameterError("edge probability " + to_string(p) + " outside [0,1]");
    const BigInt a = boost::multiprecision::numerator(p);
    const BigInt b = boost::multiprecision::denominator(p);
    const BigInt q = b - a;
    const auto slots = this->slots();
    BigInt numerator = 0;
    for (std::uint64_t e = 0; e <= slots; ++e) {
        if (counts[e] == 0)
            continue;
        numerator += BigInt(counts[e]) * boost::multiprecision::pow(a, static_cast<unsigned>(e)) *
                     boost::multiprecision::pow(q, static_cast<unsigned>(slots - e));
    }
    return Rational(numerator, boost::multiprecision::pow(b, static_cast<unsigned>(slots)));
}

void check_exact_feasible(int n, int r, const MeasureOptions& options)
{
    if (options.exact_cap_bits > kHardExactCap)
        throw ParameterError("exact cap " + std::to_string(options.exact_cap_bits) + " exceeds the hard cap of " +
                             std::to_string(kHardExactCap) + " bits");
    std::uint64_t slots = 0;
    if (!try_binom(n, r, slots) || slots > options.exact_cap_bits)
        throw FeasibilityError("exact enumeration at n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                               " needs 2^C(n,r) masks, above the cap of 2^" +
                               std::to_string(options.exact_cap_bits) + "; use mc_measure instead");
}

auto exact_histogram(int n, int r, const EdgePredicate& pred, const MeasureOptions& options) -> EdgeHistogram
{
    check_exact_feasible(n, r, options);
    const auto slots = binom(n, r);
    const CompiledPredicate compiled(pred, n, r);
    auto parts = enumerate_masks<EdgeHistogram>(
        static_cast<unsigned>(slots), options.workers, [&] { return EdgeHistogram(slots); },
        [&](EdgeHistogram& h, std::uint64_t mask, std::uint64_t edges) {
            const std::array<std::uint64_t, 1> words{mask};
            if (compiled(words, edges))
                ++h.counts[edges];
        });
    EdgeHistogram total(slots);
    for (const auto& part : parts)
        total.merge(part);
    return total;
}

auto exact_measure(int n, int r, const Rational& p, const EdgePredicate& pred, const MeasureOptions& options)
    -> MeasureResult
{
    if (p < 0 || p > 1)
        throw ParameterError("edge probability " + to_string(p) + " outside [0,1]");
    const auto hist = exact_histogram(n, r, pred, options);
    MeasureResult m;
    m.n = n;
    m.r = r;
    m.p = p;
    m.predicate = predicate_to_json(pred);
    m.method = Method::Exact;
    m.exact = hist.weight(p);
    m.value = to_double(*m.exact);
    m.log2_value = log2_high(*m.exact);
    m.satisfying = hist.total();
    return m;
}

auto clopper_pearson(std::uint64_t hits, std::uint64_t samples, double level) -> std::pair<double, double>
{
    if (samples == 0 || hits > samples)
        throw ParameterError("Clopper-Pearson needs 0 <= hits <= samples and samples >= 1");
    if (!(level > 0 && level < 1))
        throw ParameterError("confidence level must lie in (0,1)");
    const double alpha = 1.0 - level;
    const auto x = static_cast<double>(hits);
    const auto nn = static_cast<double>(samples);
    const double lo = hits == 0 ? 0.0 : boost::math::ibeta_inv(x, nn - x + 1.0, alpha / 2);
    const double hi = hits == samples ? 1.0 : boost::math::ibeta_inv(x + 1.0, nn - x, 1.0 - alpha / 2);
    return {lo, hi};
}

auto mc_measure(int n, int r, const Rational& p, const EdgePredicate& pred, std::uint64_t samples,
                std::uint64_t seed, double ci_level, int workers) -> MeasureResult
{
    if (samples == 0)
        throw ParameterError("mc_measure needs at least one sample");
    if (!(ci_level > 0 && ci_level < 1))
        throw ParameterError("confidence level must lie in (0,1)");
    const auto prob = to_probability(p);
    const auto slots = binom(n, r);
    const CompiledPredicate compiled(pred, n, r);
    const Rng base(seed);

    const std::size_t blocks = static_cast<std::size_t>((samples + kSamplesPerStream - 1) / kSamplesPerStream);
    const auto hits_per_block = map_chunks<std::uint64_t>(blocks, workers, [&](std::size_t b) {
        Rng rng = base.substream(b);
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * kSamplesPerStream;
        const std::uint64_t end = std::min(samples, begin + kSamplesPerStream);
        std::vector<std::uint64_t> words(words_for(slots));
        std::uint64_t hits = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            fill_random_mask(words, slots, prob, rng);
            std::uint64_t edges = 0;
            for (const auto w : words)
                edges += static_cast<std::uint64_t>(std::popcount(w));
            if (compiled(words, edges))
                ++hits;
        }
        return hits;
    });

    MeasureResult m;
    m.n = n;
    m.r = r;
    m.p = p;
    m.predicate = predicate_to_json(pred);
    m.method = Method::MonteCarlo;
    for (const auto h : hits_per_block)
        m.satisfying += h;
    m.samples = samples;
    m.seed = seed;
    m.value = static_cast<double>(m.satisfying) / static_cast<double>(samples);
    m.ci_level = ci_level;
    std::tie(m.ci_low, m.ci_high) = clopper_pearson(m.satisfying, samples, ci_level);
    return m;
}

auto cn_sequence(const ForbiddenFamily& fam, const Rational& p, std::span<const int> ns,
                 const MeasureOptions& options) -> std::vector<EntropyPoint>
{
    const int r = fam.uniformity();
    for (const int n : ns) {
        if (n < 0)
            throw ParameterError("negative vertex count");
        check_exact_feasible(n, r, options);
    }
    std::vector<EntropyPoint> out;
    const auto pred = EdgePredicate::forb(fam);
    for (const int n : ns) {
        EntropyPoint pt;
        pt.n = n;
        pt.measure = exact_measure(n, r, p, pred, options);
        const auto slots = binom(n, r);
        pt.c_n = slots == 0 ? HighFloat(0) : HighFloat(-pt.measure.log2_value / HighFloat(slots));
        if (pt.c_n == 0)
            pt.c_n = HighFloat(0); // no negative zero when mu = 1
        out.push_back(std::move(pt));
    }
    return out;
}

auto to_json(const MeasureResult& m) -> nlohmann::json
{
    nlohmann::json j{{"n", m.n},
                     {"r", m.r},
                     {"p", to_string(m.p)},
                     {"predicate", m.predicate},
                     {"method", m.method == Method::Exact ? "exact" : "montecarlo"}};
    if (m.method == Method::Exact) {
        j["value"] = to_string(*m.exact);
        j["value_float"] = round15(m.value);
        j["log2_value"] = to_string(m.log2_value, 30);
        j["satisfying_masks"] = m.satisfying;
        std::uint64_t slots = 0;
        try_binom(m.n, m.r, slots);
        const double c_n = slots == 0 ? 0.0 : round15(static_cast<double>(-m.log2_value / HighFloat(slots)));
        j["c_n"] = c_n == 0 ? 0.0 : c_n;
        j["ci"] = nullptr;
    } else {
        j["value"] = round15(m.value);
        j["hits"] = m.satisfying;
        j["samples"] = m.samples;
        j["seed"] = m.seed;
        j["ci_level"] = m.ci_level;
        j["ci"] = {round15(m.ci_low), round15(m.ci_high)};
    }
    return j;
}

auto to_json(const EntropyPoint& e) -> nlohmann::json
{
    nlohmann::json j{{"n", e.n},
                     {"r", e.measure.r},
                     {"p", to_string(e.measure.p)},
                     {"method", "exact"},
                     {"value", to_string(*e.measure.exact)},
                     {"c_n", round15(static_cast<double>(e.c_n))},
                     {"c_n_hp", to_string(e.c_n, 30)}};
    return j;
}

} // namespace hlab
