#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opack {

// Command-line front end. Exit codes: 0 completed with solution (or, for
// check/validate-alpha, agreement/zero violations), 1 completed without,
// 2 usage or format error, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace opack
