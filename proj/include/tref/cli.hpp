#pragma once

#include <ostream>

namespace tref {

// Entry point of the tref command. Returns the process exit code: 0 on
// success, 1 on invalid input, 2 when a size guard trips, 3 on an invariant
// violation or a failed check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tref
