#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/spec_io.hpp"

namespace hullcover::cli {

inline constexpr const char* kToolName = "hullcover";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitPremise = 2,
  kExitCertificate = 3,
};

struct CommandResult {
  Json output;
  int exit_code = kExitOk;
};

// Runs one subcommand from its fully resolved parameters. The output embeds
// a manifest holding those parameters, so replaying it reproduces the run.
CommandResult run_command(const std::string& subcommand, const Json& params,
                          bool record_timing = false);

std::string render(const Json& output);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hullcover::cli
