#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace newtoncomm {

/// Runs one CLI invocation; args excludes the program name. Returns the exit code:
/// 0 success, 1 mathematical failure, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace newtoncomm
