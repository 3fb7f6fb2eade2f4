#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace hodograph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDegenerate = 2,
  kExitFold = 3,
  kExitVerification = 4,
};

/// Entry point of the `hodograph` tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed textual form of a real in every output: %.17g.
std::string format_real(double x);

/// Parses a flat `key = value` config file. Throws std::runtime_error with a
/// line number on malformed or duplicate entries.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace hodograph::cli
