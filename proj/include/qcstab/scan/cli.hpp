// cli.hpp: command-line entry point (rates | scan | evolve | fig1)

#pragma once

#include <iosfwd>

namespace qcstab::scan {

/// Parses argv, resolves defaults < --config file < flags, runs the chosen
/// subcommand and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcstab::scan
