#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vortex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

// A caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PreconditionError"; }
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "Unsupported"; }
};

class UnsupportedKind : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
  const char* kind() const noexcept override { return "UnsupportedKind"; }
};

class NonNilpotent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* kind() const noexcept override { return "NonNilpotent"; }
};

class NotFound : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NotFound"; }
};

class NoThreshold : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoThreshold"; }
};

class NotOpenDense : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NotOpenDense"; }
};

class InconsistentModel : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InconsistentModel"; }
};

class NotStable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NotStable"; }
};

// Malformed input. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vortex
