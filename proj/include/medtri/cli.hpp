#pragma once

#include <iosfwd>

namespace medtri {

// Runs the command-line interface against explicit streams so tests can
// capture output.  Returns the process exit code: 0 on success, 2 on usage
// or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace medtri
