#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laura {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra text. Carries the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that does not describe a valid bound quiver
/// (unknown ids, non-composable paths, infinite dimension, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical statement the library relies on failed on a concrete input.
class AnomalyError : public Error {
 public:
  using Error::Error;
};

}  // namespace laura
