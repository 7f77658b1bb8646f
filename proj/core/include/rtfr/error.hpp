#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtfr {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A BVH traversal needed more stack entries than the fixed budget.
class StackOverflow : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtfr
