#pragma once

#include <stdexcept>
#include <string>

namespace oscillometer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input, configuration or precondition (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A computation could not be carried out on the given grid (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscillometer
