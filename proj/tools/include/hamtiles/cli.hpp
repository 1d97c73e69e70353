#ifndef HAMTILES_CLI_HPP
#define HAMTILES_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace hamtiles::cli {

/// Run the command line given the arguments after the program name.
/// Exit codes: 0 success, 1 verification disagreement, 2 usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace hamtiles::cli

#endif
