#pragma once

#include <stdexcept>
#include <string>

namespace edom {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based offending line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive computation was asked to run beyond its configured size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace edom
