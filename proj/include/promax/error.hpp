#pragma once

#include <stdexcept>

namespace promax {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, invalid arguments, violated preconditions.
// Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed its enumeration guard. Exit code 3.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A library invariant was broken. Exit code 4.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace promax
