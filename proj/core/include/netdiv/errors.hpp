#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdiv {

// Input text that could not be parsed (bad row structure, non-numeric field).
// Carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A node label or index that is not part of the graph.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph exceeds the hard limit of an exhaustive algorithm.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netdiv
