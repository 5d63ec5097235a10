#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// The bilinear form has a nonzero radical where a nondegenerate one is required.
class DegenerateForm : public Error {
  public:
    using Error::Error;
};

/// Exhaustive enumeration was requested beyond the supported dimension.
class DimensionTooLarge : public Error {
  public:
    using Error::Error;
};

class InvalidForm : public Error {
  public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
  public:
    using Error::Error;
};

/// An odd count of -1 fixed points; holonomy around all branch points must multiply to 1.
class OddEll : public Error {
  public:
    using Error::Error;
};

class OddSubset : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace chvar
