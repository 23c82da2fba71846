#pragma once

#include <iosfwd>

namespace schatten {

/// Entry point for the `schatten` tool. Returns the process exit code:
/// 0 success, 1 runtime error, 2 experiment finished with skipped cells,
/// 64 command-line parse error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace schatten
