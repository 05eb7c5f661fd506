#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beilab {

/// Malformed textual input (graph6, edge lists, cache lines).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its domain (e.g. the star at a vertex of degree < 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a documented size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bad configuration or unusable persisted state (config files, resume caches).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beilab
