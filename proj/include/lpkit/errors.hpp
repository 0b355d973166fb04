#ifndef LPKIT_ERRORS_HPP
#define LPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, non-finite entries, unparsable documents.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The matrix handed to the Lamperti decomposition is not a weighted
// complex permutation.
class NotSpatialError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Lamperti factorisation is not unique on Hilbert space.
class AmbiguousAtP2Error : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Infimum of saturated configurations came out empty in every slot.
class EmptyInfimumError : public Error {
 public:
  using Error::Error;
};

// A randomised search ran out of budget. Not a disproof of existence.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpkit

#endif  // LPKIT_ERRORS_HPP
