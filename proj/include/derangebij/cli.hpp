#ifndef DERANGEBIJ_CLI_HPP
#define DERANGEBIJ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace derangebij::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. args excludes the program name. Records go to out,
/// diagnostics to err.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace derangebij::cli

#endif // DERANGEBIJ_CLI_HPP
