#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ocsym::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kDegenerate = 3;
inline constexpr int kInternal = 4;

/// Runs `ocsym <subcommand> ...`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocsym::cli
