#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fqwell/cli/config.hpp"

namespace fqwell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitSolver = 4;

inline constexpr const char* kSchema = "fqwell/1";

/// Runs one job; output is written only when the job succeeds.
void execute(const JobConfig& cfg, std::ostream& out);

/// Full command-line entry point. `args` excludes the program name; `in` backs
/// `--config -`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fqwell::cli
