#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicx {

/// Runs the command line `bicx args...` (program name excluded).
/// Returns 0 on success, 1 on usage and parse errors, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicx
