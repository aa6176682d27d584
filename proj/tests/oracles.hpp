#pragma once

// Deliberately naive reference implementations. None of them touches the
// library's matcher, ranking or enumeration code; graphs are converted to
// plain adjacency matrices through their edge lists.

#include "hlab/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

struct Adjacency {
    int n = 0;
    std::vector<std::vector<bool>> adj;
};

auto adjacency(const hlab::RUniformGraph& g) -> Adjacency;
auto adjacency_from_pairs(int n, const std::vector<std::pair<int, int>>& edges) -> Adjacency;

/// All pairs {i<j} of 0..n-1 in the order (0,1),(0,2),(1,2),(0,3),...; bit b
/// of a mask refers to pairs[b].
auto pair_list(int n) -> std::vector<std::pair<int, int>>;
auto from_pair_mask(int n, std::uint64_t mask) -> Adjacency;

/// Is H isomorphic to G[D]? Tries all |D|! bijections.
auto induces(const Adjacency& g, const std::vector<int>& d, const Adjacency& h) -> bool;

/// Number of vertex subsets of G inducing a copy of some member, by a
/// double loop over subsets and permutations.
auto count_induced(const Adjacency& g, const std::vector<Adjacency>& family) -> std::uint64_t;
auto has_triangle(const Adjacency& g) -> bool;
auto has_clique(const Adjacency& g, int k) -> bool;

/// Number of 2-graphs on n labeled vertices containing a triangle,
/// by inclusion-exclusion over the triangles of K_n (n <= 5).
auto triangle_containing_count(int n) -> std::uint64_t;

/// Maximum number of m-subsets of an n-set pairwise sharing fewer than r
/// points (branch and bound).
auto max_packing(int r, int m, int n) -> int;

/// Naive clique/independent partition test: tries every labeling of the
/// vertices by parts 0..t-1.
auto partitionable(const Adjacency& f, int s, int t) -> bool;
auto tau(const Adjacency& f) -> int;

/// ex*(n, F) over all disjoint pairs (E, E0) without pruning.
auto exstar(int n, const Adjacency& f) -> int;
/// ex(n, K_k) by scanning every graph.
auto turan(int n, int k) -> int;

} // namespace oracle
