#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hlab {

using Subset = std::vector<int>;

/// Colex rank of a strictly increasing r-subset {a_1 < ... < a_r}:
/// sum over i of C(a_i, i). Throws MalformedSubsetError if `s` is not
/// strictly increasing, has a negative element or |s| != r.
auto rank_subset(std::span<const int> s, int r) -> std::uint64_t;

/// Same as rank_subset() for input already known to be valid.
auto rank_subset_unchecked(std::span<const int> s) noexcept -> std::uint64_t;

/// Inverse of rank_subset(): the r-subset with colex rank `k`.
auto unrank_subset(std::uint64_t k, int r) -> Subset;

/// Advances `s` (a k-subset of 0..n-1) to its colex successor. Returns
/// false, leaving `s` unspecified, when `s` was the last one.
auto next_combination(std::span<int> s, int n) noexcept -> bool;

/// First k-subset {0, ..., k-1} in colex order.
auto first_combination(int k) -> Subset;

/// All k-subsets of `ground` (given in increasing order), each as a list of
/// ground elements, in colex order of their positions.
auto all_subsets_of(std::span<const int> ground, int k) -> std::vector<Subset>;

} // namespace hlab
