#pragma once

#include <string>
#include <vector>

namespace sftlab {

// Batch front end. Returns the process exit status: 0 on success, 1 on
// error, 2 when a check command fails its acceptance condition.
int run_cli(const std::vector<std::string>& args);

}  // namespace sftlab
