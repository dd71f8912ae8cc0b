#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexaf {

// Full command-line front end, callable in-process. args excludes the
// program name. Returns the process exit code: 0 success / all verdicts
// hold, 1 some verdict fails, 2 usage or input error, 3 budget-limited.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexaf
