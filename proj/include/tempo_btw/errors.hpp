#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempo_btw {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Syntactically valid input carrying an unacceptable value (negative timestamp,
/// duplicate time edge when deduplication is off, ...).
class ValueError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arguments outside the domain of an operation (unknown vertex, mismatched
/// dimensions, k > n, ...).
class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// An exponential-time computation exceeded one of its guards.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string limit, const std::string& what)
      : std::runtime_error(what), limit_(std::move(limit)) {}
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

/// Invalid combination of options (e.g. non-strict prefix-foremost).
class ConfigError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace tempo_btw
