#pragma once

#include <stdexcept>
#include <string>

namespace tqm {

enum class ErrorKind {
  invalid_argument,   // precondition violated by the caller
  singular,           // formula evaluated at a pole (E = 0, r = 0, tau = 0 kernel)
  degenerate,         // zero-width packet or zero variance
  truncation,         // sampling grid too small for the packet
  negative_variance,  // emission would leave sigma^2 < 0
  no_convergence,     // quadrature failed to reach tolerance
  unsupported,        // unit pair or feature not provided
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tqm
