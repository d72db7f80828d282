#ifndef SDISC_TOOLS_CLI_HPP
#define SDISC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdisc::cli {

enum ExitCode : int { ok = 0, bad_input = 2, check_failed = 3 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sdisc::cli

#endif
