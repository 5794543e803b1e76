#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlorentz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coeff
struct DomainError : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};

// tensor
struct TypeMismatch : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct SignatureMismatch : Error {
  using Error::Error;
};

// intertwiners
struct UnknownName : Error {
  using Error::Error;
};
struct MissingParameter : Error {
  using Error::Error;
};

// rewrite
struct NotOrientable : Error {
  using Error::Error;
};
struct DuplicateLeading : Error {
  using Error::Error;
};

// algebras
struct SpanMismatch : Error {
  using Error::Error;
};
struct OracleUnverified : Error {
  using Error::Error;
};

// cli / expression grammar
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};
struct UnknownSymbol : Error {
  using Error::Error;
};
struct NoncommutativeDivision : Error {
  using Error::Error;
};

}  // namespace qlorentz
