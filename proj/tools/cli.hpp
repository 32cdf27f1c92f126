#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tridisc::cli {

/// Runs one subcommand. args[0] is the program name.
///
/// Exit status: 0 on success, 1 for a negative decision (isocheck false,
/// uniqueness falsified), 2 for usage, parse or validation errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tridisc::cli
