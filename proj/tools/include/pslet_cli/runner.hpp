#pragma once

#include <string>

#include "pslet_cli/run_config.hpp"

namespace pslet_cli {

struct RunResult {
    int exit_code = 0;   ///< 0 clean, 1 when any record errored
    std::string rendered; ///< full CSV/JSON payload
};

/// Executes a parsed invocation and renders its output. Throws
/// pslet::Error only for configuration-level problems; per-point solver
/// failures are recorded in the output and reflected in the exit code.
RunResult run(const RunConfig& config);

} // namespace pslet_cli
