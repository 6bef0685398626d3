#ifndef EK_TOOLS_CLI_HPP
#define EK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ek::cli {

/// Environment variable naming the default output format.
inline constexpr const char* kFormatEnv = "EULERKERNEL_FORMAT";

/// Runs one invocation; args excludes the program name. Returns the process
/// exit code: 0 when every check passed, 1 when a check failed, 2 on a usage
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ek::cli

#endif  // EK_TOOLS_CLI_HPP
