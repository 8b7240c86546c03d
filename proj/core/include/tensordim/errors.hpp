#ifndef TENSORDIM_ERRORS_HPP
#define TENSORDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tensordim {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands declared over different variable counts.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Leading term requested from the zero polynomial.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// The unit ideal: the quotient ring is zero and has no prime spectrum.
class EmptySpectrumError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold. The message names a witness
/// (node, index, ...) so refusals are diagnosable from reports.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed construction parameters (builders, profiles, orders).
class InvalidParamError : public Error {
 public:
  using Error::Error;
};

/// Script syntax or elaboration failure, with source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tensordim

#endif
