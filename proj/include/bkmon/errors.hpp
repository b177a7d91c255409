#pragma once

#include <stdexcept>
#include <string>

namespace bkmon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different state spaces.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A domain invariant does not hold (negative mass, bad row sum, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A joint enumeration would exceed the configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// The observed response has zero probability under the current prior.
class EvidenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bkmon
