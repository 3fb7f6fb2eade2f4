#include "hodograph/error.hpp"

namespace hodograph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Region: return "region";
    case ErrorKind::Node: return "node";
    case ErrorKind::DegenerateMap: return "degenerate-map";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::FoldDetected: return "fold-detected";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Winding: return "winding";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + " error: " + what);
}

}  // namespace hodograph
