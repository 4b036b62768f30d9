#pragma once

#include <stdexcept>
#include <string>

namespace eplink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range argument (dimension mismatch, probability outside [0,1], ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of probability zero.
class UndefinedConditioning : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

/// A scan range whose endpoints fall on the same side of the threshold.
class NonBracketingRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eplink
