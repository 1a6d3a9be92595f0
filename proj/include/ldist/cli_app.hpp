#pragma once

namespace ldist {

// Parses argv, runs the selected subcommand, and maps failures to the process
// exit contract: 2 invalid input, 3 I/O failure, 4 numerical failure.
int run_cli(int argc, char** argv);

} // namespace ldist
