#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace deeprd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition violation: invalid node id, empty sample, bad parameter.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed input text. `line` is 1-based, 0 when not applicable.
struct ParseError : Error {
  explicit ParseError(const std::string& what, std::size_t line_number = 0)
      : Error(what), line(line_number) {}
  std::size_t line;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

/// Internal consistency failure, e.g. a cycle in a graph that must be acyclic.
struct IntegrityError : Error {
  using Error::Error;
};

/// Rejection sampling ran out of attempts.
struct GenerationError : Error {
  GenerationError(const std::string& what, std::uint32_t lookahead_target,
                  std::uint32_t branch_target, std::uint32_t attempt_count)
      : Error(what),
        lookahead(lookahead_target),
        branches(branch_target),
        attempts(attempt_count) {}
  std::uint32_t lookahead;
  std::uint32_t branches;
  std::uint32_t attempts;
};

}  // namespace deeprd
