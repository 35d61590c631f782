#ifndef INVOLEX_ERROR_HPP_
#define INVOLEX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace involex {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed presentation or catalog text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Coset enumeration exceeded its coset budget.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A size limit of some search (group order, generator count) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

// The caller violated a documented precondition (not normal, not abelian...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace involex

#endif  // INVOLEX_ERROR_HPP_
