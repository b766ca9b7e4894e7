#include "green/error.hpp"

namespace green {

Error::Error(std::string name, Severity severity, const std::string& what)
    : std::runtime_error(name + ": " + what), name_(std::move(name)), severity_(severity) {}

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out = std::to_string(v.size()) + " violation(s)";
  for (const auto& s : v) out += "\n  - " + s;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("ValidationError", Severity::validation, join_violations(violations)),
      violations_(std::move(violations)) {}

}  // namespace green
