#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parbias {

// Full command-line front end as a library function for testability.
// Returns the process exit code: 0 success / all checks hold, 1 a check
// failed or backends disagreed, 2 usage or configuration error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace parbias
