#pragma once

#include <stdexcept>
#include <string>

namespace dynatomic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact division left a nonzero remainder or a non-integral quotient.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A configured degree, enumeration or search cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A series computation could not resolve its answer at the available precision.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace dynatomic
