#pragma once

#include <stdexcept>
#include <string>

namespace nsspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (on the slit,
/// outside the disk, violated exponent constraint, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Iterative or adaptive numerics did not reach the requested accuracy.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace nsspec
