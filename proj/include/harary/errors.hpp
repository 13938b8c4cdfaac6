#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harary {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class MetricError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A theorem precondition was not met (e.g. an unbalanced graph where a
/// balanced one is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace harary
