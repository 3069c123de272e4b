#pragma once

#include <iosfwd>

namespace fllp::cli {

/// Runs the `fllp` command line. Returns the process exit status:
/// 0 on success, 1 for usage, parse or validation errors, 2 when a depth,
/// step or grounding limit was hit.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fllp::cli
