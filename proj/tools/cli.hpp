#pragma once

#include <ostream>

namespace circarc::cli {

inline constexpr int kExitCircularArc = 0;
inline constexpr int kExitNotCircularArc = 10;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 70;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circarc::cli
