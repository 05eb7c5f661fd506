#include "beilab/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "beilab/errors.hpp"
#include "beilab/homology.hpp"

namespace beilab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(const std::string& value, const std::string& source) {
  int out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(source + ": expected an integer, got '" + value + "'");
  return out;
}

void apply(Settings& s, const std::string& key, const std::string& value, const std::string& source) {
  if (key == "jobs") {
    s.jobs = to_int(value, source);
    if (s.jobs < 1) throw ConfigError(source + ": jobs must be at least 1");
  } else if (key == "char") {
    s.prime = to_int(value, source);
    if (!is_prime(s.prime)) throw ConfigError(source + ": characteristic must be prime, got " + value);
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw ConfigError(source + ": format must be json or csv");
    s.format = value;
  } else {
    throw ConfigError(source + ": unknown key '" + key + "'");
  }
}

}  // namespace

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, std::string(value)).second)
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return out;
}

std::optional<std::string> process_env(const char* name) {
  if (const char* v = std::getenv(name)) return std::string(v);
  return std::nullopt;
}

Settings resolve_settings(const SettingOverrides& flags, const EnvLookup& env,
                          const std::optional<std::string>& config_text) {
  Settings s;
  if (config_text)
    for (const auto& [key, value] : parse_config(*config_text)) apply(s, key, value, "config");
  if (auto v = env("BEILAB_JOBS")) apply(s, "jobs", *v, "BEILAB_JOBS");
  if (auto v = env("BEILAB_CHAR")) apply(s, "char", *v, "BEILAB_CHAR");
  if (flags.jobs) apply(s, "jobs", std::to_string(*flags.jobs), "--jobs");
  if (flags.prime) apply(s, "char", std::to_string(*flags.prime), "--char");
  if (flags.format) apply(s, "format", *flags.format, "--format");
  return s;
}

}  // namespace beilab
