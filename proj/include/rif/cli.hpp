#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rif::cli {

// Full CLI entry point. Returns the process exit code:
// 0 success, 1 domain error (message names the error case), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace rif::cli
