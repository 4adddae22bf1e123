#pragma once

#include <stdexcept>
#include <string>

namespace catgeo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative method did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A sampled space or scenario could not be constructed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace catgeo
