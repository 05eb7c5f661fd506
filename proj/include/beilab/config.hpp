#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace beilab {

/// Knobs shared by every subcommand.
struct Settings {
  int jobs = 1;
  int prime = 2;
  std::string format = "json";  // or "csv"
};

/// Values given explicitly on the command line.
struct SettingOverrides {
  std::optional<int> jobs;
  std::optional<int> prime;
  std::optional<std::string> format;
};

/// `key = value` lines. Blank lines and text after '#' are ignored; values may be
/// wrapped in double quotes. Throws ConfigError on anything else or on a repeated key.
std::map<std::string, std::string> parse_config(std::string_view text);

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

/// The process environment.
std::optional<std::string> process_env(const char* name);

/// Flags beat BEILAB_JOBS / BEILAB_CHAR, which beat the config file, which beats the defaults.
/// Recognized config keys: jobs, char, format. Throws ConfigError on invalid values.
Settings resolve_settings(const SettingOverrides& flags, const EnvLookup& env,
                          const std::optional<std::string>& config_text);

}  // namespace beilab
