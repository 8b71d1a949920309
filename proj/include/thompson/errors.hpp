#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPowerOfTwo : Error {
  using Error::Error;
};

struct BadEndpoints : Error {
  using Error::Error;
};

struct NotMonotone : Error {
  using Error::Error;
};

struct SlopeNotPowerOfTwo : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

struct DomainMismatch : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

struct LeafCountMismatch : Error {
  using Error::Error;
};

struct NotInWreathSubgroup : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

// Parse failure; `position` is the byte offset into the input text.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace thompson
