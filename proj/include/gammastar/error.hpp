#pragma once

#include <stdexcept>
#include <string>

namespace gammastar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarSetMismatch : public Error {
 public:
  VarSetMismatch() : Error("polynomials live over different variable sets") {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class NotZeroDimensional : public Error {
 public:
  explicit NotZeroDimensional(int krull_dimension)
      : Error("ideal is not zero-dimensional (Krull dimension " +
              std::to_string(krull_dimension) + ")"),
        dim_(krull_dimension) {}
  int krull_dimension() const noexcept { return dim_; }

 private:
  int dim_;
};

class NonIsolatedSingularities : public Error {
 public:
  explicit NonIsolatedSingularities(int krull_dimension)
      : Error("fibre has non-isolated singularities (Jacobian ideal of "
              "dimension " +
              std::to_string(krull_dimension) + ")"),
        dim_(krull_dimension) {}
  int krull_dimension() const noexcept { return dim_; }

 private:
  int dim_;
};

/// Generic choices could not be certified within the retry budget.
class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a negative top cell count).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NegativeTopCellCount : public InvariantViolation {
 public:
  explicit NegativeTopCellCount(long value)
      : InvariantViolation("negative top cell count " + std::to_string(value)) {}
};

class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace gammastar
