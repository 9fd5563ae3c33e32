#ifndef AWAREKIT_TOOLS_CLI_HPP
#define AWAREKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace awarekit::cli {

// Exit codes.
inline constexpr int kOk = 0;        // check: true; others: every verdict holds
inline constexpr int kNegative = 1;  // check: false; others: some verdict fails
inline constexpr int kError = 2;     // load, parse, budget or usage error

// args excludes the program name. budget_env is the value of AWAREKIT_BUDGET
// (empty when unset).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& budget_env = {});

}  // namespace awarekit::cli

#endif  // AWAREKIT_TOOLS_CLI_HPP
