#ifndef KZL_CLI_HPP
#define KZL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kzl {

// Runs one CLI invocation. Exit codes: 0 verified success, 1 mathematical
// failure (a checked statement is false; witnesses are reported), 2 input or
// usage error. KOSZUL_GB_LIMIT caps the S-pair count (abort with exit 2).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kzl

#endif
