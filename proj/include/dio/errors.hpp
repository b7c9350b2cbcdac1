#pragma once

#include <stdexcept>
#include <string>

namespace dio {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// rhs vector length does not match the number of equations.
class WrongArity : public Error {
 public:
  using Error::Error;
};

/// A right-hand side entry is negative.
class NegativeRhs : public Error {
 public:
  using Error::Error;
};

/// An even-only operation received an odd argument.
class OddInput : public Error {
 public:
  using Error::Error;
};

/// An odd-only operation received an even argument.
class EvenInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the stated domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A CaseTag contradicts the arguments it was applied to.
class InconsistentTag : public Error {
 public:
  using Error::Error;
};

/// Argument outside the residue class a partial-sum identity is stated for.
class ResidueError : public Error {
 public:
  using Error::Error;
};

/// The dynamic-programming table would exceed the configured cell cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// No solution exists for the requested construction.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (e.g. a division that must be exact had a
/// remainder).  Indicates a defect in this library, not in the caller.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dio
