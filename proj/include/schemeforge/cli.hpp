#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemeforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line; args excludes the program name. Reports go to out,
/// diagnostics and usage text to err. Returns the process exit code: 0 on
/// success or acceptance, 1 when the matrix is rejected or fails a
/// classification, 2 on unusable input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schemeforge
