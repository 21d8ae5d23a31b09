#pragma once

#include <stdexcept>
#include <string>

namespace fpt {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input shape: overlapping blocks, mismatched sizes, alphabet clashes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain a constructor or check accepts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the given arguments (e.g. Mobius of a non-comparable pair).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested size beyond a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fpt

namespace fpt {

/// File missing, unreadable, unwritable, or not valid JSON.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fpt
