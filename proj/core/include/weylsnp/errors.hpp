#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylsnp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, documents, tensor strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structurally well-formed input that violates a mathematical invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of a mathematical operation is not met.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPositiveDefinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotNilpotent : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A matrix fails the Leibniz rule; `i`, `j` index the first failing basis pair.
class NotADerivation : public DomainError {
 public:
  NotADerivation(const std::string& what, std::size_t i, std::size_t j)
      : DomainError(what), i(i), j(j) {}
  std::size_t i;
  std::size_t j;
};

class NonCommutingImages : public DomainError {
 public:
  using DomainError::DomainError;
};

class InexactSqrt : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegeneratePlane : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroField : public DomainError {
 public:
  using DomainError::DomainError;
};

class CentralField : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInSnpSpace : public DomainError {
 public:
  using DomainError::DomainError;
};

class InadmissibleParams : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateForm : public DomainError {
 public:
  using DomainError::DomainError;
};

class OddDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSurjective : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSkewDerivation : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotUnimodular : public DomainError {
 public:
  using DomainError::DomainError;
};

class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateTerm : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace weylsnp
