#ifndef ALLSAT_CLI_HPP
#define ALLSAT_CLI_HPP

#include <iosfwd>

namespace allsat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kVerifyFailed = 3,
  kResourceCap = 4,
};

/// Entry point of the `allsat` tool. Reads DIMACS from the named file, or
/// from `in` when the file is "-" or omitted.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace allsat::cli

#endif  // ALLSAT_CLI_HPP
