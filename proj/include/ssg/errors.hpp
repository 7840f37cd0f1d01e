#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent group definition (unknown generator, bad
/// permutation, wrong section count, ...).
class DefinitionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured cap (nodes, states, enumeration size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace ssg
