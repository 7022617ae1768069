#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocelf::cli {

/// Exit codes: 0 success, 1 domain error (validation failure, unknown type,
/// bad feature spec, ...), 2 input error (unreadable or malformed file, bad
/// command line).
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kInputError = 2;

/// Version of every --json document.
inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocelf::cli
