#pragma once

#include <iosfwd>

namespace rmtopt {

// Entry point of the rm-topt command. Returns 0 on success, 1 on usage, parse
// or size errors, and 2 when --verify finds the output inequivalent.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rmtopt
