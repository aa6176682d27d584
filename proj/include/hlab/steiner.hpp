#pragma once

#include "hlab/rational.hpp"
#include "hlab/subset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hlab {

/// A family of m-subsets (blocks) of 0..n-1. It is a partial Steiner
/// system with parameters (r, m, n) when every r-subset lies in at most one
/// block; verify_system() decides that. Blocks are kept sorted, and the
/// list is kept in lexicographic order by the constructors below.
struct SteinerSystem {
    int r = 0;
    int m = 0;
    int n = 0;
    std::vector<Subset> blocks;

    auto d() const noexcept -> std::uint64_t { return blocks.size(); }

    friend auto operator==(const SteinerSystem&, const SteinerSystem&) -> bool = default;
};

struct SteinerReport {
    bool valid = false;
    std::uint64_t d = 0;
    std::uint64_t covered = 0;             // distinct r-subsets lying in some block
    Rational uncovered_fraction;           // 1 - covered / C(n,r)
    bool within_block_bound = false;       // d * C(m,r) <= C(n,r)
    std::vector<Subset> violations;        // r-subsets lying in two or more blocks
    std::vector<std::string> malformed;    // structural problems with parameters or blocks
};

auto verify_system(const SteinerSystem& sys) -> SteinerReport;

/// True iff the achieved uncovered fraction is at most `lambda`.
auto meets_lambda(const SteinerReport& report, const Rational& lambda) -> bool;

/// Largest C(n, m) the constructions and the exhaustive maximality check
/// enumerate.
inline constexpr std::uint64_t kMaxCandidateBlocks = std::uint64_t{1} << 26;

/// Random greedy packing: every m-subset is tried once, in an order given
/// by a seeded Fisher-Yates shuffle of the colex ranks, and kept when none
/// of its r-subsets is covered yet. The result is maximal.
auto greedy_system(int r, int m, int n, std::uint64_t seed) -> SteinerSystem;

struct NibbleOptions {
    double bite = 0.1;
    int rounds = 10;
};

/// Rounds of random nibbles followed by greedy completion. In each round
/// every still-addable block is selected independently with probability
/// bite / (average number of addable blocks through an uncovered r-set);
/// selected blocks that share an r-subset with another selected block are
/// dropped, the rest are added. With rounds = 0 the output equals
/// greedy_system(r, m, n, seed).
auto nibble_system(int r, int m, int n, std::uint64_t seed, const NibbleOptions& options = {}) -> SteinerSystem;

/// Relabels every vertex v as sigma[v]; throws ParameterError unless sigma
/// is a permutation of 0..n-1.
auto permute_system(const SteinerSystem& sys, std::span<const int> sigma) -> SteinerSystem;

struct MaximalityReport {
    bool exhaustive = false;
    std::uint64_t candidates_checked = 0;
    std::optional<Subset> addable; // an m-subset with all r-subsets uncovered
};

/// Exhaustive when C(n,m) <= kMaxCandidateBlocks, otherwise checks
/// `samples` random m-subsets drawn from Rng(sample_seed).
auto check_maximal(const SteinerSystem& sys, std::uint64_t sample_seed = 0, std::uint64_t samples = 1'000'000)
    -> MaximalityReport;

struct GreedyBest {
    SteinerSystem system;
    std::uint64_t seed = 0;                        // seed that produced `system`
    std::uint64_t restarts = 0;
    std::map<std::uint64_t, std::uint64_t> d_histogram; // block count -> number of restarts
};

/// Runs greedy_system with seeds seed, seed+1, ..., seed+restarts-1 and
/// keeps the largest system (lowest seed on ties).
auto best_greedy(int r, int m, int n, std::uint64_t restarts, std::uint64_t seed, int workers = 1) -> GreedyBest;

auto system_to_json(const SteinerSystem& sys) -> nlohmann::json;
auto system_from_json(const nlohmann::json& j) -> SteinerSystem;
auto to_json(const SteinerReport& report) -> nlohmann::json;
auto to_json(const MaximalityReport& report) -> nlohmann::json;
/// Histogram keys are block counts rendered as strings.
auto to_json(const GreedyBest& best) -> nlohmann::json;

} // namespace hlab
