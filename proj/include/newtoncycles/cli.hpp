#ifndef NEWTONCYCLES_CLI_HPP
#define NEWTONCYCLES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace newtoncycles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one invocation; args excludes the program name. Results go to out,
/// warnings and single-line "error: <Kind>: <reason>" messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtoncycles::cli

#endif  // NEWTONCYCLES_CLI_HPP
