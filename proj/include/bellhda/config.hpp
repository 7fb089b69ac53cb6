#pragma once

#include <string>
#include <string_view>

#include "bellhda/runner.hpp"

namespace bellhda {

/// Parses flat `key = value` lines; `#` starts a comment. Keys not listed in
/// the README are rejected, as are malformed values. Throws ConfigError with
/// the offending line number.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

/// BELLHDA_SEED, when set, replaces the seed (decimal integer).
void apply_env_overrides(RunConfig& config);

/// Inverse of parse_config for every key.
std::string format_config(const RunConfig& config);

}  // namespace bellhda
