#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendric {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (window too shallow, alphabet
/// mismatch, word not in the language, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A LanguageWindow failed factorial closure or biextendability.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dendric
