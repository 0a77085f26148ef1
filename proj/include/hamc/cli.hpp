#pragma once

namespace hamc {

// Toolkit and on-disk format versions, printed by --version.
inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr const char* kFormatVersions =
    "hampath-family v1, partialword v1, graph v1";

// Runs one CLI command.  Writes any requested artifact files, prints a
// single JSON run report to stdout, and returns the process exit code:
// 0 success, 1 verification failure, 2 usage error, 3 resource limit.
int dispatch(int argc, const char* const* argv);

} // namespace hamc
