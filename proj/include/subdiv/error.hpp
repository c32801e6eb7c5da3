#pragma once

#include <stdexcept>
#include <string>

namespace subdiv {

enum class ErrorKind {
  domain,          // operation undefined for this argument (e.g. N = 0 in the recurrence)
  parameter,       // tension parameter not allowed for the family
  normalization,   // symbol violates a(1) = 2 or the rule sums
  classification,  // unknown family
  size,            // polygon / mesh too small
  shape,           // profile and polygon disagree in length
  profile,         // inconsistent tension profile
  step_limit,      // refinement depth above the configured cap
  parse,           // malformed number or document
  usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subdiv
