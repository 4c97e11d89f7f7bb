#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemeforge {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible order, or an argument outside its domain.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Seeing one of these means a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix text. Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A hypothesis a matrix must satisfy before Hoffman or predistance work.
enum class Hypothesis {
  kNonnegative,
  kDoublyStochastic,
  kIrreducible,
  kNormal,
  kNonzeroLambda,
};

const char* to_string(Hypothesis h);

class HypothesisError : public PreconditionError {
 public:
  explicit HypothesisError(Hypothesis failed)
      : PreconditionError(std::string("matrix is not ") + to_string(failed)), failed_(failed) {}

  Hypothesis failed() const { return failed_; }

 private:
  Hypothesis failed_;
};

/// One of the association scheme axioms failed on a concrete set of indices.
class SchemeAxiomError : public Error {
 public:
  SchemeAxiomError(std::string axiom, std::vector<std::size_t> witness)
      : Error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<std::size_t>& witness) {
    std::string s = "axiom " + axiom + " fails at (";
    for (std::size_t k = 0; k < witness.size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(witness[k]);
    }
    return s + ")";
  }

  std::string axiom_;
  std::vector<std::size_t> witness_;
};

}  // namespace schemeforge
