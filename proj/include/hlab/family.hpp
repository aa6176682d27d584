#pragma once

#include "hlab/hypergraph.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hlab {

namespace detail {
struct PatternIndex;
}

/// A finite family F of r-graphs, deduplicated up to isomorphism and
/// sorted by (order, canonical code). `min_order()` is t: every member
/// has at least t vertices. Precomputed orbit tables for each member order
/// are shared between copies.
class ForbiddenFamily {
public:
    ForbiddenFamily() = default;

    auto members() const noexcept -> const std::vector<RUniformGraph>& { return members_; }
    auto codes() const noexcept -> const std::vector<CanonicalCode>& { return codes_; }
    auto uniformity() const noexcept -> int { return r_; }
    auto min_order() const noexcept -> int { return t_; }
    auto size() const noexcept -> std::size_t { return members_.size(); }

    auto patterns() const noexcept -> const std::vector<std::shared_ptr<const detail::PatternIndex>>&
    {
        return patterns_;
    }

    friend auto normalize_family(std::vector<RUniformGraph> raw) -> ForbiddenFamily;

private:
    std::vector<RUniformGraph> members_;
    std::vector<CanonicalCode> codes_;
    std::vector<std::shared_ptr<const detail::PatternIndex>> patterns_;
    int r_ = 0;
    int t_ = 0;
};

/// Builds a family: rejects an empty list, mixed uniformity and members
/// with fewer than r vertices (ConstructionError); collapses isomorphic
/// duplicates.
auto normalize_family(std::vector<RUniformGraph> raw) -> ForbiddenFamily;

/// F < G: some vertex subset of G induces a member of F.
auto contains_induced(const RUniformGraph& g, const ForbiddenFamily& fam) -> bool;

/// Number of vertex subsets D of G with G[D] isomorphic to a member.
auto count_induced(const RUniformGraph& g, const ForbiddenFamily& fam) -> std::uint64_t;

/// Family matching compiled for a fixed vertex count and a fixed ground
/// set of vertices (all of 0..n-1 by default). Evaluates directly on raw
/// edge masks, so it is the hot path for exhaustive enumeration. Only
/// vertex subsets of the ground set are examined.
class FamilyMatcher {
public:
    FamilyMatcher(const ForbiddenFamily& fam, int n, std::vector<int> ground = {});
    ~FamilyMatcher();
    FamilyMatcher(FamilyMatcher&&) noexcept;
    auto operator=(FamilyMatcher&&) noexcept -> FamilyMatcher&;
    FamilyMatcher(const FamilyMatcher&) = delete;
    auto operator=(const FamilyMatcher&) -> FamilyMatcher& = delete;

    auto contains(std::span<const std::uint64_t> mask) const -> bool;
    auto count(std::span<const std::uint64_t> mask) const -> std::uint64_t;

private:
    struct OrderClass;
    std::vector<OrderClass> classes_;
    int n_ = 0;
    int r_ = 0;
};

} // namespace hlab
