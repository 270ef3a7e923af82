#ifndef LCT_CLI_HPP
#define LCT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lct {

/// Exit codes: 0 success, 1 check failure, 2 usage, 3 enumeration guard,
/// 4 invalid configuration, 5 I/O.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Effective guard override: the --force flag, or failing that the LCT_FORCE
/// environment variable (set and not "0").
bool enumeration_force(bool force_flag);

}  // namespace lct

#endif
