#pragma once

#include <stdexcept>
#include <string>

namespace nanofilter {

/// Base class for all errors raised by this library.
class FilterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public FilterError {
 public:
  using FilterError::FilterError;
};

class NotPositiveDefinite : public FilterError {
 public:
  using FilterError::FilterError;
};

/// A function produced a NaN or infinity; the message names the coordinate.
class NonFiniteValue : public FilterError {
 public:
  using FilterError::FilterError;
};

}  // namespace nanofilter
