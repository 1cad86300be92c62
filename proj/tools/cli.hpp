#pragma once

#include <ostream>

namespace gft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCounterexample = 3;

/// Entry point shared by the gft binary and the tests. Everything the command
/// prints goes to out/err; files are written only where --out asks for them.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
