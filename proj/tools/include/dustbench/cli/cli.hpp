#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dustbench::cli {

// Default config path when --config is absent.
inline constexpr const char* kConfigEnvVar = "DUSTBENCH_CONFIG";

inline constexpr const char* kResolvedConfigFile = "config.resolved.json";
inline constexpr const char* kSummaryFile = "summary.json";

// Runs the dustbench command line. `args` excludes the program name.
// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dustbench::cli
