#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace zero_annulus::cli {

/// Process exit codes. The set is closed: every command returns one of these.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,            // unreadable or malformed polynomial, bad usage
  kInvalidParameters = 3,     // nonpositive / unparseable parameters, bad family
  kContainmentViolation = 4,  // a computed annulus misses an oracle root
  kOracleFailure = 5,         // root finder did not converge
};

/// Runs the command line `args` (args[0] is the program name). Records go to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zero_annulus::cli
