// Command line front end.
//
//   deon check <file>                  every query of the scenario
//   deon prove <file> --query <id>     a single query
//   deon model <file>                  consistency check with its witness
//   deon export-thf <file> --out <p>   THF problem, conjecture from --query
//
// Common flags: --logic sdl|ddl (overrides the file), --max-worlds <n>
// (default from DEON_MAX_WORLDS, else 4 for SDL and 3 for DDL),
// --format text|json, --timings.
//
// Exit status: 0 all queries decided, 1 input or usage error, 2 a
// resource limit was hit, 3 some query is UNKNOWN within the world bound.

#ifndef DEON_CLI_HPP_
#define DEON_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace deon {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitLimit = 2, kExitUnknown = 3 };

// `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deon

#endif  // DEON_CLI_HPP_
