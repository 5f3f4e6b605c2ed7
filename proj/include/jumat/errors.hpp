#pragma once

#include <stdexcept>
#include <string>

namespace jumat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operand shapes do not conform (matrix products, sums, non-square input).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, documents, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates the defining conditions of the set it claims to belong to
/// (direction not isotropic, tangent not orthogonal, mode violated, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The input matrix is not a member of the group required by the operation.
class NotMemberError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. reducing a constant).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace jumat
