#pragma once

#include "hlab/rational.hpp"
#include "hlab/rng.hpp"
#include "hlab/subset.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hlab {

/// An r-graph on labeled vertices 0..n-1. Edge e is present iff bit
/// rank_subset(e) of the edge mask is set; the mask has exactly C(n, r)
/// bits, packed little-endian into 64-bit words. Graphs with n < r are
/// allowed and have an empty mask.
class RUniformGraph {
public:
    RUniformGraph() = default;
    RUniformGraph(int n, int r);

    static auto from_edges(int n, int r, std::span<const Subset> edges) -> RUniformGraph;
    static auto from_mask(int n, int r, std::span<const std::uint64_t> words) -> RUniformGraph;
    static auto complete(int n, int r) -> RUniformGraph;

    auto order() const noexcept -> int { return n_; }
    auto uniformity() const noexcept -> int { return r_; }
    auto slots() const noexcept -> std::uint64_t { return slots_; }
    auto words() const noexcept -> std::span<const std::uint64_t> { return words_; }

    auto has_edge(std::uint64_t rank) const noexcept -> bool
    {
        return (words_[rank >> 6] >> (rank & 63)) & 1U;
    }
    auto has_edge(std::span<const int> e) const -> bool;

    void set_edge(std::uint64_t rank, bool present = true);
    void set_edge(std::span<const int> e, bool present = true);

    auto edge_count() const noexcept -> std::uint64_t;

    /// Edges as sorted subsets, in colex order.
    auto edges() const -> std::vector<Subset>;

    friend auto operator==(const RUniformGraph&, const RUniformGraph&) -> bool = default;

private:
    int n_ = 0;
    int r_ = 1;
    std::uint64_t slots_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of 64-bit words holding `slots` bits.
constexpr auto words_for(std::uint64_t slots) noexcept -> std::size_t
{
    return static_cast<std::size_t>((slots + 63) / 64);
}

/// G[D]: vertices of D (strictly increasing) relabeled 0..|D|-1 in order.
/// Throws DegenerateSubsetError when |D| < r.
auto induced_subgraph(const RUniformGraph& g, std::span<const int> d) -> RUniformGraph;

/// Relabels vertex v as sigma[v]. Throws ParameterError unless sigma is a
/// permutation of 0..n-1.
auto permute(const RUniformGraph& g, std::span<const int> sigma) -> RUniformGraph;

/// Minimal edge mask over all vertex relabelings. Masks are compared as
/// unsigned integers whose most significant bit is the highest colex rank.
struct CanonicalCode {
    int n = 0;
    int r = 1;
    std::vector<std::uint64_t> words;

    friend auto operator==(const CanonicalCode&, const CanonicalCode&) -> bool = default;
    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) -> std::strong_ordering;
};

/// Largest order canonical_code() accepts for uniformity r.
auto default_canonical_bound(int r) noexcept -> int;

/// Exhaustive n!-permutation minimization. Throws SizeLimitError when
/// n exceeds `bound` (default: default_canonical_bound(r)).
auto canonical_code(const RUniformGraph& g, int bound = -1) -> CanonicalCode;

/// G(n, p) with p = num/den: one Bernoulli draw per edge slot, in rank
/// order. Throws ParameterError unless 0 <= p <= 1 and num, den fit in
/// 64 bits.
auto random_graph(int n, int r, const Rational& p, Rng& rng) -> RUniformGraph;

/// p as a (num, den) pair of 64-bit integers, validated to lie in [0, 1].
struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};
auto to_probability(const Rational& p) -> Probability;

/// Overwrites `words` with a G(n,p) mask of `slots` bits.
void fill_random_mask(std::span<std::uint64_t> words, std::uint64_t slots, Probability p, Rng& rng);

} // namespace hlab
