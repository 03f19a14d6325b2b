#pragma once

#include <stdexcept>
#include <string>

namespace lpakk {

/// Error raised for invalid user input: malformed graphs, unknown identifiers,
/// missing coefficient degrees, dimension mismatches. Carries a short
/// machine-readable code (e.g. "unknown_vertex") alongside the message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace lpakk
