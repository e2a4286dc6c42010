#pragma once

#include <iosfwd>

namespace tauq::cli {

// Executes one verification subcommand; report to `out`, diagnostics to `err`.
// Exit code 0 when every check passed (or the run is report-only), 1 when a
// check failed, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tauq::cli
