#pragma once

#include <ostream>

namespace shieldbic {

/// Command-line driver. Returns 0 on success, 1 on runtime failure (I/O,
/// malformed input), 2 on usage errors.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shieldbic
