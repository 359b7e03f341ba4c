#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyharm::app {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kSolverError = 3 };

/// Entry point of the polyharm tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyharm::app
