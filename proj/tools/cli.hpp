#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repdim::cli {

/// Exit codes: 0 pass, 1 a mathematical check failed, 2 usage or bad
/// input, 3 a resource cap was hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repdim::cli
