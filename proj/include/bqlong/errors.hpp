#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bqlong {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a constructor or operation (bad parameter, unknown
/// element name, out-of-range index).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation tables that are malformed: wrong shape, entries out of range,
/// or a table file that does not follow the `biquandle v1` format.
class TableFormatError : public Error {
 public:
  explicit TableFormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number in the source file, 0 when not read from a file.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Tables are well formed but violate an axiom required by the caller.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A value that must hold by construction did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bqlong
