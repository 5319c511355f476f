#pragma once

#include <stdexcept>
#include <string>

namespace ccodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, ragged matrices, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested construction does not exist for this graph.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was refused because it exceeds a configured limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A received word could not be decoded to a consistent message.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ccodes
