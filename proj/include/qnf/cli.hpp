#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnf {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // bad flags, syntax errors, malformed files
inline constexpr int kExitSemantic = 2;  // not Clifford+T, verification failed

// Runs one command; args exclude the program name. `in` backs the "-" file name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnf
