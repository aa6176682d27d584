#pragma once

#include "hlab/predicate.hpp"
#include "hlab/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hlab {

/// Largest mask space (in bits, i.e. C(n,r)) exact enumeration will ever
/// accept, whatever the configured cap says.
inline constexpr unsigned kHardExactCap = 30;
inline constexpr unsigned kDefaultExactCap = 24;

struct MeasureOptions {
    unsigned exact_cap_bits = kDefaultExactCap;
    int workers = 1;
};

/// counts[e] = number of satisfying masks with exactly e edges.
struct EdgeHistogram {
    std::vector<std::uint64_t> counts;

    explicit EdgeHistogram(std::uint64_t slots = 0) : counts(slots + 1, 0) {}

    auto slots() const noexcept -> std::uint64_t { return counts.size() - 1; }
    auto total() const noexcept -> std::uint64_t;
    void merge(const EdgeHistogram& other);

    /// sum over e of counts[e] * p^e * (1-p)^(slots-e), exactly.
    auto weight(const Rational& p) const -> Rational;
};

enum class Method { Exact, MonteCarlo };

struct MeasureResult {
    int n = 0;
    int r = 0;
    Rational p;
    nlohmann::json predicate;
    Method method = Method::Exact;

    std::optional<Rational> exact; // set iff method == Exact
    double value = 0;              // exact value rounded, or the point estimate
    HighFloat log2_value;          // log2 of the exact value (exact only)

    std::uint64_t satisfying = 0; // satisfying masks (exact) or hits (sampled)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double ci_level = 0;
    double ci_low = 0;
    double ci_high = 0;
};

/// Throws FeasibilityError if C(n,r) exceeds the cap.
void check_exact_feasible(int n, int r, const MeasureOptions& options);

/// Histogram over all 2^C(n,r) edge masks satisfying `pred`.
auto exact_histogram(int n, int r, const EdgePredicate& pred, const MeasureOptions& options = {}) -> EdgeHistogram;

/// mu_n(C) = Pr[G(n,p) in C] by exhaustive enumeration.
auto exact_measure(int n, int r, const Rational& p, const EdgePredicate& pred, const MeasureOptions& options = {})
    -> MeasureResult;

/// Two-sided Clopper-Pearson interval for `hits` out of `samples`.
auto clopper_pearson(std::uint64_t hits, std::uint64_t samples, double level) -> std::pair<double, double>;

/// Samples per RNG substream in mc_measure(); part of the reproducibility
/// contract.
inline constexpr std::uint64_t kSamplesPerStream = 4096;

/// Monte-Carlo estimate of mu_n(C). Sample block b (of kSamplesPerStream
/// draws) uses Rng(seed).substream(b), so the result is independent of
/// `workers`.
auto mc_measure(int n, int r, const Rational& p, const EdgePredicate& pred, std::uint64_t samples,
                std::uint64_t seed, double ci_level, int workers = 1) -> MeasureResult;

struct EntropyPoint {
    int n = 0;
    MeasureResult measure;
    HighFloat c_n; // -log2(mu_n) / C(n,r)
};

/// c_n for Forb(fam) at each n; exact only.
auto cn_sequence(const ForbiddenFamily& fam, const Rational& p, std::span<const int> ns,
                 const MeasureOptions& options = {}) -> std::vector<EntropyPoint>;

auto to_json(const MeasureResult& m) -> nlohmann::json;
auto to_json(const EntropyPoint& e) -> nlohmann::json;

} // namespace hlab
