#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fllp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algebra description violates the lin-HA requirements.
/// Carries every violation found, not just the first one.
class AlgebraError : public Error {
 public:
  explicit AlgebraError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A configured resource bound (grounding size, iteration count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace fllp
