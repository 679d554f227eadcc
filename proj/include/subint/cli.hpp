#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subint
{

// Exit codes shared by every subcommand.
inline constexpr int exit_provable = 0; // also: valid, checks, no disagreement
inline constexpr int exit_refutable = 1; // also: invalid, rejected, violation found
inline constexpr int exit_error = 2;     // usage, parse, model or resource problem

/// Runs the subintkit command line. `args` excludes the program name.
int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace subint
