#pragma once

#include <stdexcept>
#include <string>

namespace oqsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed model input: unknown factor label, dimension mismatch, bad layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Bad operator expression, catalog name, or catalog parameters.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Density matrix failed trace/positivity validation.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Numerical pathology (eigensolver non-convergence, inconsistent phase fit).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Configuration file problems; message carries the key path when known.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace oqsym
