#ifndef BETTIPAIR_CLI_HPP
#define BETTIPAIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bettipair {

// Exit codes: 0 success, 1 parse failure, 2 inadmissible input,
// 3 construction retry exhaustion, 4 failed verification checks.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bettipair

#endif
