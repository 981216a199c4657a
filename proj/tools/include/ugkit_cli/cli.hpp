#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ugkit::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace ugkit::cli
