#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sweff {

/// Malformed profile, lottery or instance text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a model invariant (probabilities, dimensions, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (enumeration size) would be exceeded.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent decision routes disagreed, or a certificate failed to
/// re-verify. Always a bug, never a user error.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sweff
