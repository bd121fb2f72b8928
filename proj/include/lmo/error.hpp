#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Word or arity mismatch in a cobordism expression.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant (malformed graph, non-symmetric matrix,
/// ++ struts in a top-substantial element, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (singular Gaussian, truncation mismatch,
/// enumeration limit exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lmo
