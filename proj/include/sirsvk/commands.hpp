#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sirsvk/config.hpp"

namespace sirsvk {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitDivergence = 3 };

// Each command validates the config before computing and throws ConfigError,
// DomainError or DivergenceError. The return value is the exit code.

int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_analyze(const RunConfig& cfg, std::ostream& out);
/// Grid points that fail are reported on err; the rest is still written and
/// the exit code is kExitDivergence.
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out);

/// Full command-line front end: `simulate | analyze | sweep | compare` with
/// --config, --out, --paper-figure and --dump-config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sirsvk
