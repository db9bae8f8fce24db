#pragma once

#include <ostream>

namespace mmohocc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the mmohocc tool. Binary subcommand output (keystream,
// encrypt, decrypt) goes to `out` when no --out path is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mmohocc::cli
