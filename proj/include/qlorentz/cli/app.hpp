#pragma once

#include <ostream>

namespace qlorentz {

/// Runs the command line: verify, relations, nf, obstruction, length, eval.
/// Returns 0 when every executed check passed, 1 on an unexpected check
/// failure, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlorentz
