#pragma once

#include "hlab/hypergraph.hpp"
#include "hlab/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hlab {

/// A cover of V(F) by `cliques.size()` cliques and `independents.size()`
/// independent sets; parts may be empty.
struct CliqueIndependentPartition {
    std::vector<Subset> cliques;
    std::vector<Subset> independents;
};

/// Largest order tau() accepts.
inline constexpr int kMaxTauOrder = 12;

/// Does V(F) split into s cliques and (t - s) independent sets (empty parts
/// allowed)? Returns a witness when it does. F must be a 2-graph.
auto find_partition(const RUniformGraph& f, int s, int t) -> std::optional<CliqueIndependentPartition>;

struct TauResult {
    int t = 0;
    int witness_s = 0; // no partition into witness_s cliques and t - witness_s independent sets
    std::vector<CliqueIndependentPartition> refutations; // level t+1, one per s = 0..t+1
};

/// The largest t for which some s in 0..t admits no partition of V(F) into
/// s cliques and t - s independent sets. Throws SizeLimitError above
/// kMaxTauOrder vertices, ParameterError for r != 2 and DegenerateSubsetError
/// for the empty graph on zero vertices (no level fails).
auto tau(const RUniformGraph& f) -> TauResult;

/// 1 / tau(F); throws DegenerateSubsetError when tau(F) = 0.
auto predicted_c_half(const RUniformGraph& f) -> Rational;

/// Largest |E| witness_check() and exstar() accept.
inline constexpr int kMaxWitnessEdges = 24;
inline constexpr int kMaxExstarOrder = 6;

struct WitnessResult {
    bool ok = false;
    std::optional<std::vector<Subset>> counterexample; // the first failing X in mask order
};

/// Checks that (V, E0 u X) has no induced copy of F for every X subset of E.
/// Throws ParameterError for overlapping E and E0.
auto witness_check(int n, const RUniformGraph& f, const std::vector<Subset>& e, const std::vector<Subset>& e0)
    -> WitnessResult;

struct ExStarResult {
    std::uint64_t value = 0;
    std::vector<Subset> e;
    std::vector<Subset> e0;
};

/// ex*(n, F) by exhaustive search with lexicographically least witness
/// (E, E0) by edge mask. Throws FeasibilityError for n > kMaxExstarOrder
/// and ConstructionError when every graph on n vertices contains F.
auto exstar(int n, const RUniformGraph& f, int workers = 1) -> ExStarResult;

auto to_json(const CliqueIndependentPartition& p) -> nlohmann::json;
auto to_json(const TauResult& t) -> nlohmann::json;
auto to_json(const WitnessResult& w) -> nlohmann::json;
auto to_json(const ExStarResult& x) -> nlohmann::json;

} // namespace hlab
