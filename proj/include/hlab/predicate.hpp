#pragma once

#include "hlab/family.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hlab {

/// A class C of r-graphs on a fixed vertex set, described as a boolean
/// expression over edge masks.
class EdgePredicate {
public:
    enum class Kind {
        Forb,         // no induced member of the family
        Contains,     // some induced member of the family
        ContainsOn,   // some induced member inside a fixed vertex subset D
        MinEdges,     // at least k edges
        MaxEdges,     // at most k edges
        Explicit,     // one of a listed set of labeled graphs
        Intersection, // all children hold
        Complement,   // the single child fails
    };

    static auto forb(ForbiddenFamily fam) -> EdgePredicate;
    static auto contains(ForbiddenFamily fam) -> EdgePredicate;
    static auto contains_on(ForbiddenFamily fam, Subset vertices) -> EdgePredicate;
    static auto min_edges(std::uint64_t k) -> EdgePredicate;
    static auto max_edges(std::uint64_t k) -> EdgePredicate;
    static auto explicit_set(std::vector<RUniformGraph> graphs) -> EdgePredicate;
    static auto intersection(std::vector<EdgePredicate> children) -> EdgePredicate;
    static auto complement(EdgePredicate inner) -> EdgePredicate;
    static auto always_true() -> EdgePredicate { return min_edges(0); }

    auto kind() const noexcept -> Kind { return kind_; }
    auto family() const -> const ForbiddenFamily& { return *family_; }
    auto threshold() const noexcept -> std::uint64_t { return threshold_; }
    auto vertices() const noexcept -> const Subset& { return vertices_; }
    auto graphs() const noexcept -> const std::vector<RUniformGraph>& { return graphs_; }
    auto children() const noexcept -> const std::vector<EdgePredicate>& { return children_; }

    /// Uniformity implied by the predicate, or 0 when it places no
    /// constraint (edge-count predicates).
    auto implied_uniformity() const -> int;

private:
    Kind kind_ = Kind::MinEdges;
    std::shared_ptr<const ForbiddenFamily> family_;
    std::uint64_t threshold_ = 0;
    Subset vertices_;
    std::vector<RUniformGraph> graphs_;
    std::vector<EdgePredicate> children_;
};

auto predicate_to_json(const EdgePredicate& pred) -> nlohmann::json;
auto predicate_from_json(const nlohmann::json& j) -> EdgePredicate;
auto family_to_json(const ForbiddenFamily& fam) -> nlohmann::json;
auto family_from_json(const nlohmann::json& j) -> ForbiddenFamily;

/// An EdgePredicate bound to a vertex count and uniformity. Evaluation is
/// pure and thread-safe.
class CompiledPredicate {
public:
    CompiledPredicate(const EdgePredicate& pred, int n, int r);
    ~CompiledPredicate();
    CompiledPredicate(CompiledPredicate&&) noexcept;
    auto operator=(CompiledPredicate&&) noexcept -> CompiledPredicate&;

    /// `edges` must be the popcount of `mask`.
    auto operator()(std::span<const std::uint64_t> mask, std::uint64_t edges) const -> bool;
    auto operator()(const RUniformGraph& g) const -> bool;

    auto order() const noexcept -> int { return n_; }
    auto uniformity() const noexcept -> int { return r_; }

    struct Node;

private:
    std::unique_ptr<Node> root_;
    int n_;
    int r_;
};

} // namespace hlab
