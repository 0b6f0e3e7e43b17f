#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quat::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace quat::cli
