#pragma once

#include <stdexcept>
#include <string>

namespace toricgp {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shape, out-of-range index, unknown name.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// A configured cap (enumeration size, basis size, degree, rewrite steps)
// was hit. Partial results are discarded.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Exponent or coordinate arithmetic would leave the checked integer range.
class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace toricgp
