#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hodograph/verifier.hpp"

namespace hodograph::cli {

/// Public suite names accepted by `verify`, in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Besides the public names this accepts the parts of the map
/// suite, "map-legendre" and "map-pde". Throws ErrorKind::Parameter for an
/// unknown name.
std::vector<VerificationReport> run_suite(std::string_view name);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace hodograph::cli
