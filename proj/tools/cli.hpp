#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigiscope::cli {

/// Run the command line given argv-style arguments (argv[0] is the program
/// name). Exit codes: 0 success, 1 analysis-domain error (absolute, equator,
/// invalid framework), 2 I/O, parse or usage error.
int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigiscope::cli
