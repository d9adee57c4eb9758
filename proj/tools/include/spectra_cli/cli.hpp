#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra::cli {

// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kGuard = 3,
  kInvalidModel = 4,
  kPostselection = 5,
};

// Runs one command line (args excludes the program name). Never throws;
// every failure is reported on `err` and mapped to an exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spectra::cli
