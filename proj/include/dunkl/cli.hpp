#pragma once

#include <iosfwd>

namespace dunkl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the dunkl_oscillator tool. Subcommands: spectrum,
/// wavefunction, verify. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
