#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eccforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: optimize {ga|pso}, validate, serve, replay, attack, compare.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eccforge::cli
