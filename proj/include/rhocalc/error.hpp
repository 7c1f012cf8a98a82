#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhocalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an element that is null at its knowledge order.
class NullDivision : public Error {
 public:
  using Error::Error;
};

/// Root of an element outside the positive cone.
class NotPositive : public Error {
 public:
  using Error::Error;
};

/// A value would exceed every power s^-n.
class NotModerate : public Error {
 public:
  using Error::Error;
};

/// A primitive was applied outside its real domain, or at an argument whose
/// value has no series representation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OutsideDomain : public Error {
 public:
  using Error::Error;
};

class NotInfinitesimal : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of the fundamental theorem (arcwise connected domain) fails.
class NotConnected : public Error {
 public:
  using Error::Error;
};

/// Exponent denominator exceeds the supported bound.
class ExponentRange : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rhocalc
