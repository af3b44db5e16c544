#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace logder {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class ConstantInputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHomogeneousError : public Error {
 public:
  using Error::Error;
};

/// Weight vectors must be strictly positive: with mixed signs the graded
/// slices are infinite-dimensional and the Hilbert-Poincare series is not
/// defined.
class NonPositiveWeightsError : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class CommonFactorError : public Error {
 public:
  CommonFactorError(const std::string& what, std::string witness)
      : Error(what + " (common factor " + witness + ")"),
        witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class NotInModuleError : public Error {
 public:
  using Error::Error;
};

class FiltrationViolation : public Error {
 public:
  using Error::Error;
};

class NotMinimalError : public Error {
 public:
  using Error::Error;
};

}  // namespace logder
