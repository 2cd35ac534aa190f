#pragma once

#include <ostream>

namespace gstir::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInvalidParameters = 3;
inline constexpr int kVerificationFailed = 4;
inline constexpr int kCacheFormat = 5;
inline constexpr int kInternal = 1;

// Runs one command line; machine output goes to out, logs and the human
// summary to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gstir::cli
