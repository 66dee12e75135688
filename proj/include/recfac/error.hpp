#pragma once

#include "recfac/int.hpp"

#include <stdexcept>
#include <string>

namespace recfac {

/// Bad input data: a violated precondition the caller can fix.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that was required to satisfy Δ[A] = 1 does not.
class NotInGammaError : public Error {
 public:
  NotInGammaError() : Error("not in Γ_a") {}
};

/// The descent found no strictly smaller |F(r)| in the admissible residue
/// classes. Expected for polynomials that are not recursively factorable.
class DescentStall : public Error {
 public:
  explicit DescentStall(Int at)
      : Error("recursively-factorable criterion violated at n = " + at.str()), at_(std::move(at)) {}

  const Int& at() const noexcept { return at_; }

 private:
  Int at_;
};

/// An identity the library proves could not be confirmed on a result.
/// Always an implementation bug, never bad data.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace recfac
