#pragma once

#include <stdexcept>
#include <string>

namespace chaoshash {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible sizes, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input bytes cannot be encoded in the requested mode.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  /// Index of the offending byte in the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Stepping a point whose strategy has no terms left.
class ExhaustedStrategyError : public Error {
 public:
  using Error::Error;
};

/// A strategy is too short for the requested comparison depth.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// File could not be read.
class FileError : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the interchange formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoshash
