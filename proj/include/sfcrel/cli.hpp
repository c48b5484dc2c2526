#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfcrel::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kDisagreement = 4;

// Runs one invocation; args excludes the program name.
//   eval | simulate | search | sweep
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfcrel::cli
