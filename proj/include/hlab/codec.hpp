#pragma once

#include "hlab/hypergraph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hlab {

/// graph6 for 2-graphs with n <= 62: one size byte (63 + n) followed by
/// the upper triangle in column-major order (which is colex order), packed
/// six bits per byte, most significant first, each byte offset by 63.
auto to_graph6(const RUniformGraph& g) -> std::string;

/// Parses one graph6 string. Trailing newline is tolerated.
auto from_graph6(std::string_view text) -> RUniformGraph;

/// {"n": int, "r": int, "edges": [[v, ...], ...]} with edges in colex order.
auto graph_to_json(const RUniformGraph& g) -> nlohmann::json;
auto graph_from_json(const nlohmann::json& j) -> RUniformGraph;

auto to_json_text(const RUniformGraph& g) -> std::string;
auto from_json_text(std::string_view text) -> RUniformGraph;

/// Accepts either a JSON graph object or a single graph6 line.
auto parse_graph(std::string_view text) -> RUniformGraph;

/// Accepts a JSON array of graph objects (or graph6 strings), a single
/// JSON graph object, or newline-separated graph6 lines.
auto parse_graph_list(std::string_view text) -> std::vector<RUniformGraph>;

} // namespace hlab
