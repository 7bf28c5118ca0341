#pragma once

#include <stdexcept>
#include <string>

namespace tsaudit {

// Malformed input to a library call: wrong dimensions, unknown labels,
// non-partitions. Maps to CLI exit code 2.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that cannot be parsed (bad JSON, bad rational literal).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold, e.g. asking for a
// money pump against a distribution that is disintegrable.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent routes disagreed (primal vs dual, a certificate failed
// re-verification, hierarchy violated). Always a bug. Maps to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tsaudit
