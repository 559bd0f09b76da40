#pragma once

#include <ostream>

namespace dsavoid::cli {

// Exit codes: 0 success / verified, 1 solver or verification failure, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dsavoid::cli
