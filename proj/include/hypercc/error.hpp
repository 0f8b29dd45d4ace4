#pragma once

#include <stdexcept>
#include <string>

namespace hypercc {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files (exit code 3).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid arguments or unusable data reaching a computation (exit code 4).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercc
