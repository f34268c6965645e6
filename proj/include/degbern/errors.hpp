#pragma once

#include <stdexcept>
#include <string>

namespace degbern {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, lambda descriptors, CLI flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands from different coefficient domains, a non-invertible element,
/// or a lambda value the requested construction is undefined at.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's documented range.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact cancellation that must happen did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace degbern
