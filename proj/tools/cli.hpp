#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hlab::cli {

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error, 2 on a
/// usage error; nothing is written to `out` unless the command succeeds.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

/// CSV rendering of a command result: an object becomes one row, an array of
/// objects one row per element. Columns are the sorted union of keys; nested
/// values are written as compact JSON.
auto render_csv(const nlohmann::json& result) -> std::string;

/// The text written for a scalar or nested JSON value in one CSV cell,
/// before quoting.
auto csv_cell(const nlohmann::json& value) -> std::string;

} // namespace hlab::cli
