#pragma once

#include <iosfwd>

namespace qclone::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;            // success, or an LOCC-infeasible verdict
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitUsage = 2;         // bad arguments, unreadable/unwritable files, malformed input

// Entry point behind the `qclone` binary. Subcommands: analyze, construct,
// certify, verify, sweep.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qclone::cli
