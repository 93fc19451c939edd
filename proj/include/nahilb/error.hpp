#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nahilb {

enum class ErrorKind {
  MissingVariable,
  DivisionByZero,
  NotExpandable,
  NotHomogeneous,
  DegenerateRestriction,
  DimensionMismatch,
  InvalidInput,
  SizeGuard,
  NotNested,
  NotFullFlag,
  NotBisymmetric,
  NotNilfil,
  NotInFiber,
  NonConstantVdim,
  NotPolynomial,
  NonElimination,
  NotImplemented,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a kind; messages are for humans only.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nahilb
