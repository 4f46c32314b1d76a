#pragma once

#include <stdexcept>
#include <string>

namespace reslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (length mismatch, bad family
/// parameters, inconsistent ledger, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Exponent or coefficient arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured work guard and was abandoned.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace reslab
