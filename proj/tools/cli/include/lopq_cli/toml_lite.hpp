#pragma once

#include <string_view>

#include "lopq/json_io.hpp"

namespace lopq::cli {

/// Reads the TOML subset used by job files into a Json object:
///   # comments, [table] and [a.b] headers, key = value with basic strings,
///   integers, booleans, and flat arrays of those.
/// Throws std::invalid_argument naming the offending line.
Json parse_toml(std::string_view text);

}  // namespace lopq::cli
