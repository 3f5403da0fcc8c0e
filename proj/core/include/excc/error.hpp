#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace excc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (dimension mismatch, p out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No closed-form reference exists for the requested (body, K) pair.
class NoClosedForm : public Error {
 public:
  using Error::Error;
};

/// Numerical failure in an iterative or factorization routine.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Gram matrix lost positive definiteness at the given pivot.
class RankDeficient : public NumericalError {
 public:
  RankDeficient(std::size_t pivot, const std::string& what)
      : NumericalError(what), pivot_(pivot) {}

  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

}  // namespace excc
