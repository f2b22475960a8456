#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 usage error, 3 precondition error.

#include <ostream>

namespace flagcycle {

/// Parses argv and runs one subcommand; all output goes to `out`, diagnostics
/// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagcycle
