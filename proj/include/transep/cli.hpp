#pragma once

#include <string>
#include <vector>

namespace transep::cli {

/// Entry point shared by the binary and the tests. args excludes argv[0].
/// Returns 0 on success, 1 on validation/runtime errors, 2 on usage errors.
int run(std::vector<std::string> args);

} // namespace transep::cli
