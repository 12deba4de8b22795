#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liework {

/// Operands with incompatible shapes (matrix sizes, ambient dimensions).
class DimensionMismatch : public std::invalid_argument {
public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A post-verification that must hold by theory failed; indicates a bug here, not bad input.
class InternalCheckError : public std::logic_error {
public:
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

/// Syntax error in an input file, with 1-based position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

/// Input parsed but violates a structural axiom (Jacobi, metric axioms, group axioms).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& transcript) : std::runtime_error(transcript) {}
};

}  // namespace liework
