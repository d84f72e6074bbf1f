#pragma once

#include <stdexcept>
#include <string>

namespace higgs {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: unparsable forms, wrong twists, mixed fields.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Operands from different coefficient fields were combined.
class FieldMismatch : public DataError {
 public:
  using DataError::DataError;
};

/// A form's twist does not match what the operation requires.
class TwistMismatch : public DataError {
 public:
  using DataError::DataError;
};

/// The inputs are well-formed but violate an operation's precondition
/// (zero polynomial, characteristic too small, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace higgs
