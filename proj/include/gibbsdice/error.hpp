#pragma once

#include <stdexcept>
#include <string>

namespace gibbsdice {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-positive, non-finite or otherwise unusable die geometry.
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

/// A model parameter (beta, epsilon, iteration count...) outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Paired vectors of different length (energies vs counts, p vs counts).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Pearson cell with zero expected count.
class DegenerateCell : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent experiment data. Carries the 1-based line and
/// column (field) of the offending entry when known; 0 means "not tied to a
/// position".
class DatasetError : public Error {
 public:
  DatasetError(const std::string& message, std::size_t line = 0,
               std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace gibbsdice
