#pragma once

#include <stdexcept>
#include <string>

namespace cliffalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A blade index or generator exceeds the dimension of the quadratic space.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Shapes or lengths of operands do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Specialization hit a pole. `where()` names the offending blade or entry.
class PoleError : public Error {
 public:
  PoleError(std::string where, const std::string& at)
      : Error("pole at t = " + at + " in " + where), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Structure constants that do not come from any quadratic form.
class InconsistentConstants : public Error {
 public:
  using Error::Error;
};

/// A matrix or multivector is not in the span it is required to lie in.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// Weight multiset that is not a nonnegative combination of irreducible characters.
class NotACharacter : public Error {
 public:
  using Error::Error;
};

/// A one-parameter family whose generic fiber is degenerate.
class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

/// Input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffalg
