#pragma once

#include "hlab/hypergraph.hpp"

#include <string_view>

namespace hlab {

// Small 2-graphs used as patterns. Cycles and paths follow vertex order:
// C_k has edges {i, i+1 mod k}; P_k is the path 0-1-...-(k-1) on k vertices.
auto complete_graph(int k) -> RUniformGraph;
auto cycle_graph(int k) -> RUniformGraph;
auto path_graph(int k) -> RUniformGraph;
auto empty_graph(int k) -> RUniformGraph;

/// "K4", "C5", "P3", "E2" (empty). Throws ParseError for anything else.
auto named_graph(std::string_view name) -> RUniformGraph;

} // namespace hlab
