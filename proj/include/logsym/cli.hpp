// Command-line front end. Exit codes: 0 success or verdict true, 1 verdict
// false, 2 input or usage error.
#ifndef LOGSYM_CLI_HPP
#define LOGSYM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace logsym {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace logsym

#endif
