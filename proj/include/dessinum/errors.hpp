#pragma once

#include <stdexcept>
#include <string>

namespace dessinum {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (passport, tree code, CLI argument).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class NegativeR : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class EulerViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotRealizable : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotApplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotTransitive : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dessinum
