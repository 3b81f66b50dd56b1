#pragma once

#include <stdexcept>
#include <string>

namespace rmtopt {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An instance exceeds a configured or structural size limit.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotACodeword : public Error {
 public:
  using Error::Error;
};

}  // namespace rmtopt
