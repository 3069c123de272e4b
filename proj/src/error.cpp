#include "fllp/error.hpp"

namespace fllp {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string text = "invalid hedge algebra";
  for (const auto& v : violations) {
    text += "\n  ";
    text += v;
  }
  return text;
}

}  // namespace

AlgebraError::AlgebraError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace fllp
