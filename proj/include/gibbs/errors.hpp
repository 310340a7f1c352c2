#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gibbs {

// Argument outside an operation's domain (bad ids, isolated vertices for the
// normalized Laplacian, negative tau, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list or spec text. line() is 1-based; 0 when not line-bound.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : DomainError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Non-finite input or an iteration that failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem too large for the configured dense limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random generation could not produce an admissible sample within its budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gibbs
