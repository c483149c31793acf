#pragma once

#include <stdexcept>
#include <string>

namespace posinv {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields/algebras, or an object is malformed.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Interval refinement hit max_precision_bits before deciding.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violates an invariant that must hold mathematically.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file, literal or flag.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ClosureViolation : public Error {
 public:
  using Error::Error;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace posinv
