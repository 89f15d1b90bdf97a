#ifndef PH_CLI_HPP
#define PH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the partition-harmonics command line.  Machine output goes to `out`,
// diagnostics (including the wall-time line) to `err`.  argv excludes the
// program name.  Exit codes: 0 success, 1 verification failure, 2 usage.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ph::cli

#endif  // PH_CLI_HPP
