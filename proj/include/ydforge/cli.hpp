#pragma once

#include <string>
#include <vector>

namespace ydforge {

/// Exit codes: 0 all checks pass, 1 verification failure, 2 malformed
/// input, 3 Groebner degree-cap abort (always with a distinct message).
int run(const std::vector<std::string>& args);

}  // namespace ydforge
