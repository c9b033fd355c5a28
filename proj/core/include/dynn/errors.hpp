#pragma once

#include <stdexcept>

namespace dynn {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected input: bad text, wrong shape, excluded vector. The CLI maps these
// to exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};
struct BadShapeError : InputError {
  using InputError::InputError;
};
struct ZeroVectorError : InputError {
  using InputError::InputError;
};
struct IndexOutOfRangeError : InputError {
  using InputError::InputError;
};

// Violated contract or impossible state: indicates a bug, never bad input.
// The CLI maps these to exit code 3.
struct InternalError : Error {
  using Error::Error;
};

struct PreconditionError : InternalError {
  using InternalError::InternalError;
};
struct OverflowError : InternalError {
  using InternalError::InternalError;
};
struct DivergedError : InternalError {
  using InternalError::InternalError;
};
struct InconsistentDiagramError : InternalError {
  using InternalError::InternalError;
};

}  // namespace dynn
