#pragma once

#include <stdexcept>
#include <string>

#include "bigpic/arith.hpp"

namespace bigpic {

/// Base of every mathematical failure reported by the library. The CLI maps
/// these to exit code 1 and reports `name()`.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SingularMatrix : public DomainError {
 public:
  SingularMatrix() : DomainError("SingularMatrix", "matrix has determinant 0") {}
};

class NotDivisible : public DomainError {
 public:
  NotDivisible() : DomainError("NotDivisible", "first class does not divide the second") {}
};

class NotUnimodular : public DomainError {
 public:
  NotUnimodular() : DomainError("NotUnimodular", "conjugating matrix must have determinant +1 or -1") {}
};

class NotPrimitive : public DomainError {
 public:
  NotPrimitive() : DomainError("NotPrimitive", "class is not primitive (entries share a prime factor)") {}
};

class PrimeMismatch : public DomainError {
 public:
  PrimeMismatch() : DomainError("PrimeMismatch", "local classes live over different primes") {}
};

class Degenerate : public DomainError {
 public:
  Degenerate() : DomainError("Degenerate", "Moebius matrix has ad - bc = 0") {}
};

class LengthMismatch : public DomainError {
 public:
  LengthMismatch() : DomainError("LengthMismatch", "coefficient tables differ in length") {}
};

/// Errors that carry the offending prime.
class PrimeDomainError : public DomainError {
 public:
  PrimeDomainError(std::string name, const std::string& what, Int prime)
      : DomainError(std::move(name), what + " at p=" + prime.get_str()), prime_(std::move(prime)) {}
  const Int& prime() const noexcept { return prime_; }

 private:
  Int prime_;
};

class NotAUnit : public PrimeDomainError {
 public:
  explicit NotAUnit(Int p)
      : PrimeDomainError("NotAUnit", "a + c*z is not invertible", std::move(p)) {}
};

class NotRepresentable : public PrimeDomainError {
 public:
  explicit NotRepresentable(Int p)
      : PrimeDomainError("NotRepresentable", "component is neither 0 nor a power of p", std::move(p)) {}
};

/// Malformed literal input. Not a DomainError: the CLI maps it to exit 2.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bigpic
