#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (bad degree, zero form,
/// wrong stratum, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (form files, generator exports, rationals).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A consistency check that can only fail through a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace catkit
