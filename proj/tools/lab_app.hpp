#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stacksort::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Flat "key = value" configuration, '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Resolves one setting: flag, then environment variable, then config file, then fallback.
std::string resolve_setting(const std::optional<std::string>& flag, const char* env_name,
                            const std::map<std::string, std::string>& config, const std::string& key,
                            const std::string& fallback);

/// Entry point of the `stacksort-lab` CLI. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stacksort::lab
