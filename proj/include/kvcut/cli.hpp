#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kvcut {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `kvcut` command line. args[0] is the program name. Records go to
/// `out` (one JSON object per line, or instance text), human summaries and
/// errors to `err`; "-" as an input path reads `in`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Same, on the process streams.
int cli_main(int argc, char** argv);

}  // namespace kvcut
