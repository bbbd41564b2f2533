#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `pnd` command line; args exclude the program name.
/// Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnd
