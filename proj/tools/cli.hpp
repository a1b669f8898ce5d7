#ifndef QUIVERLAB_CLI_HPP
#define QUIVERLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverlab::cli {

/// Runs one invocation (arguments without the program name) against the
/// given streams. Returns the process exit code: 0 on success, 1 on domain
/// errors, 2 on parse/usage errors. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverlab::cli

#endif
