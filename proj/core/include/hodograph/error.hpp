#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodograph {

enum class ErrorKind {
  Domain,        // argument outside the mathematical domain
  Pole,          // Gamma pole or similar singular point
  Parameter,     // invalid model or function parameter
  Overflow,      // series magnitude not representable
  Region,        // momentum radius on the wrong side of rho_T
  Node,          // evaluation on a nodal line (Theta = 0, M = 0, u = 0)
  DegenerateMap, // lambda = 1: inverse Legendre transform impossible
  NoConvergence,
  FoldDetected,  // Jacobian sign change along an inversion path
  Divergence,    // improper integral or series does not converge
  Winding,       // contour does not wind once around the origin
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception; `kind()` lets
/// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace hodograph
