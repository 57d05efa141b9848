#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacring {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset into the
/// parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A sum of two nonzero forms of different degree.
class NonHomogeneousError : public Error {
 public:
  using Error::Error;
};

/// Objects from two different rings (or orders) were combined.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong arity, dimension too
/// large, zero divisor ideal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace jacring
