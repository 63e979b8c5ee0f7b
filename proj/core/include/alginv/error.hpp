#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alginv {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad files, unknown names, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The operation is not defined for this kind of input (wrong dimension, formal parameters
/// where numbers are required, index out of range).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A desk-scale guard (degree, slot count, component size, pair budget) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace alginv
