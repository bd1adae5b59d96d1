#pragma once

#include <stdexcept>
#include <string>

namespace rigikit {

/// Malformed or schema-violating input. `location()` names the offending
/// spot, e.g. "edges[3]" or "byte 17".
class InputError : public std::runtime_error {
 public:
  InputError(std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)),
        message_(message) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// An operation was called outside its documented domain (non-rigid input to
/// an R2 search, an infeasible generator budget, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rigikit
